#include <doctest.h>

#include "embhom/checks/dense_oracle.hpp"
#include "embhom/embedded.hpp"

using namespace embhom;

namespace {

const RationalField Q;

Hypergraph hg(std::initializer_list<Hyperedge> edges) { return Hypergraph::from_edges(edges); }

const Hypergraph kHollowNoVertices = hg({{0, 1}, {1, 2}, {0, 2}});
const Hypergraph kHollowTriangle = hg({{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}});
const Hypergraph kPathWithTop = hg({{0, 1}, {1, 2}, {0, 1, 2}});

std::vector<std::size_t> dims(const ChainComplex<RationalField>& c) { return c.dims(); }

oracle::Cells cells(const Hypergraph& h) {
  oracle::Cells out;
  for (const auto& e : h.edges()) out[e.size()].push_back({e.vertices().begin(), e.vertices().end()});
  return out;
}

}  // namespace

TEST_CASE("boundary matrix signs") {
  GradedBasis<EdgeOrder::unordered> basis(delta_closure(hg({{0, 1, 2}})).edges());
  const auto b1 = boundary_matrix(Q, basis, 1).matrix;
  // {0,1} -> +{1} - {0}
  CHECK(b1.at(1, 0) == 1);
  CHECK(b1.at(0, 0) == -1);
  const auto b2 = boundary_matrix(Q, basis, 2).matrix;
  // {0,1,2} -> {1,2} - {0,2} + {0,1}; labels in degree 1 are 01, 02, 12.
  CHECK(b2.at(0, 0) == 1);
  CHECK(b2.at(1, 0) == -1);
  CHECK(b2.at(2, 0) == 1);
  CHECK(multiply(b1, b2).is_zero());
  CHECK_THROWS_AS(boundary_matrix(Q, basis, 0), DomainError);
}

TEST_CASE("boundary matrix missing faces") {
  GradedBasis<EdgeOrder::unordered> basis(hg({{0, 1}}).edges());
  CHECK_THROWS_AS(boundary_matrix(Q, basis, 1), DomainError);
  const auto ext = boundary_matrix(Q, basis, 1, MissingFaces::extend);
  CHECK(ext.codomain.size() == 2);
  CHECK(ext.matrix.rows() == 2);
}

TEST_CASE("ambient complexes") {
  const auto a = ambient_closure(Q, hg({{0, 1, 2}}));
  CHECK(dims(a.complex) == std::vector<std::size_t>{3, 3, 1});
  const auto f = ambient_full<RationalField, EdgeOrder::unordered>(Q, {0, 1, 2}, 2);
  CHECK(f.complex == a.complex);
  CHECK(ambient_closure(Q, Hypergraph()).complex.num_degrees() == 0);
  std::set<VertexId> big;
  for (VertexId v = 0; v < 17; ++v) big.insert(v);
  CHECK_THROWS_AS((ambient_full<RationalField, EdgeOrder::unordered>(Q, big, 1)), ResourceError);
}

TEST_CASE("inf complex examples") {
  const auto simplex = delta_closure(hg({{0, 1, 2}}));
  const auto ec = embedded_complexes(Q, simplex);
  CHECK(ec.inf.complex == ec.ambient.complex);
  CHECK(ec.sup.complex == ec.ambient.complex);

  const auto hollow = inf_complex(Q, kHollowNoVertices);
  CHECK(hollow.dim(0) == 0);
  CHECK(hollow.dim(1) == 1);

  const auto path = inf_complex(Q, kPathWithTop);
  CHECK(path.complex.total_dim() == 0);
}

TEST_CASE("sup complex examples") {
  CHECK(dims(sup_complex(Q, kPathWithTop).complex) == std::vector<std::size_t>{2, 3, 1});
  CHECK(dims(sup_complex(Q, kHollowNoVertices).complex) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("inf and sup agree with the dense oracle") {
  for (const auto& h : {kHollowNoVertices, kHollowTriangle, kPathWithTop,
                        hg({{0}, {2}, {0, 1}, {1, 2, 3}, {0, 2, 3}, {2, 3}})}) {
    const auto ec = embedded_complexes(Q, h);
    const std::size_t top = ec.ambient.complex.num_degrees() - 1;
    const auto o = oracle::embedded_oracle(cells(h), cells(delta_closure(h)), top);
    CHECK(ec.inf.complex.dims() == o.inf_dims);
    CHECK(ec.sup.complex.dims() == o.sup_dims);
    CHECK(betti(ec.inf.complex) == o.inf_betti);
    CHECK(betti(ec.sup.complex) == o.sup_betti);
  }
}

TEST_CASE("betti numbers") {
  CHECK(betti(ambient_closure(Q, hg({{0, 1, 2}})).complex) == std::vector<std::size_t>{1, 0, 0});
  CHECK(betti(inf_complex(Q, kHollowTriangle).complex) == std::vector<std::size_t>{1, 1});
  CHECK(betti(ChainComplex<RationalField>(Q)).empty());

  const auto h = homology(inf_complex(Q, kHollowTriangle).complex, true);
  CHECK(h.field == "Q");
  CHECK(h.representatives.at(1).cols() == 1);
}

TEST_CASE("d squared failure carries a certificate") {
  auto b1 = SparseMatrix<RationalField>::identity(Q, 1);
  auto b2 = SparseMatrix<RationalField>::identity(Q, 1);
  ChainComplex<RationalField> bad(Q, {1, 1, 1}, {b1, b2});
  CHECK(bad.d_squared_failure() == std::optional<std::size_t>(1));
  try {
    betti(bad);
    FAIL("expected an invariant violation");
  } catch (const InvariantViolation& e) {
    CHECK(e.certificate().find("degree 2") != std::string::npos);
  }
}

TEST_CASE("quasi-isomorphism theta") {
  auto r = verify_quasi_iso_theta(Q, kPathWithTop);
  CHECK(r.betti_inf == std::vector<std::size_t>{0, 0, 0});
  CHECK(r.betti_sup == std::vector<std::size_t>{0, 0, 0});
  CHECK(r.is_iso);
  r = verify_quasi_iso_theta(Q, kHollowTriangle);
  CHECK(r.betti_inf == std::vector<std::size_t>{1, 1});
  CHECK(r.is_iso);
  CHECK(verify_quasi_iso_theta(Q, Hyperdigraph::from_edges({{0, 1}, {1, 0}, {2, 0, 1}})).is_iso);
}

TEST_CASE("quotient complex") {
  const auto amb = ambient_full<RationalField, EdgeOrder::unordered>(Q, {0, 1, 2}, 2);
  std::vector<EchelonBasis<RationalField>> zero;
  for (std::size_t n = 0; n < 3; ++n) zero.emplace_back(Q, amb.complex.dim(n));
  const auto z = subcomplex_from_spans(amb.complex, std::move(zero));
  CHECK(quotient_complex(amb.complex, z).complex == amb.complex);

  const auto ec = embedded_complexes(Q, hg({{0, 1}}), std::optional(amb));
  CHECK(quotient_complex(amb.complex, ec.sup).complex.dim(1) == 2);

  const auto r = verify_quotient_quasi_iso(Q, kPathWithTop, {0, 1, 2}, 2);
  CHECK(r.betti_mod_sup == r.betti_mod_inf);
  CHECK(r.surjective);
  CHECK(r.is_iso);
}

TEST_CASE("non-subcomplex is rejected") {
  const auto amb = ambient_full<RationalField, EdgeOrder::unordered>(Q, {0, 1}, 1);
  std::vector<EchelonBasis<RationalField>> spans;
  spans.emplace_back(Q, 2);
  spans.emplace_back(Q, 1);
  spans[1].insert(SparseVector<RationalField>::unit(Q, 0));
  CHECK_THROWS_AS(subcomplex_from_spans(amb.complex, spans), DomainError);
}

TEST_CASE("four-term sequence") {
  auto r = four_term_sequence(Q, delta_closure(hg({{0, 1, 2}, {2, 3}})));
  CHECK(r.all_identity);
  r = four_term_sequence(Q, kPathWithTop);
  CHECK_FALSE(r.all_identity);
  CHECK(r.surjective == std::vector<bool>{true, true, true});
  CHECK(r.stage_dims[1] == r.chain_sup_dims);
  CHECK(r.stage_dims[2] == r.chain_inf_dims);
  r = four_term_sequence(Q, Hypergraph());
  CHECK(r.all_identity);
}

TEST_CASE("hodge laplacian") {
  CHECK(hodge_laplacian(ambient_closure(Q, hg({{0, 1, 2}})).complex, 0).harmonic_rank == 1);
  CHECK(hodge_laplacian(inf_complex(Q, kHollowTriangle).complex, 1).harmonic_rank == 1);
  const auto empty = hodge_laplacian(inf_complex(Q, kHollowTriangle).complex, 4);
  CHECK(empty.matrix.rows() == 0);
  CHECK(empty.harmonic_rank == 0);
}

TEST_CASE("symmetric group action") {
  CHECK(sigma_action(DirectedHyperedge({0, 1}), {1, 0}) == DirectedHyperedge({1, 0}));
  CHECK_THROWS_AS(sigma_action(DirectedHyperedge({0, 1}), {0, 0}), DomainError);
  CHECK(invariant_dimension(lift(hg({{0, 1}})), 2) == 1);
  CHECK(invariant_dimension(lift(hg({{0, 1}, {0, 2}, {1, 2}})), 2) == 3);
  CHECK(invariant_dimension(lift(hg({{0, 1, 2}, {1, 2, 3}})), 3) == 2);
  CHECK_THROWS_AS(invariant_dimension(Hyperdigraph::from_edges({{0, 1}}), 2), DomainError);
}

TEST_CASE("delta identity") {
  const auto u = delta_set_of(GradedBasis<EdgeOrder::unordered>(delta_closure(hg({{0, 1, 2}})).edges()));
  CHECK(delta_identity_holds(u));
  const auto d = delta_set_of(
      GradedBasis<EdgeOrder::ordered>(delta_closure(Hyperdigraph::from_edges({{0, 1, 2}})).edges()));
  CHECK(delta_identity_holds(d));
  auto corrupted = u;
  std::swap(corrupted.faces[2][0][0], corrupted.faces[2][0][1]);
  CHECK_FALSE(delta_identity_holds(corrupted));
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  CHECK(f.mul(3, f.inv(3)) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK_THROWS_AS(PrimeField(8), DomainError);
  CHECK(betti(inf_complex(f, kHollowTriangle).complex) == std::vector<std::size_t>{1, 1});
}

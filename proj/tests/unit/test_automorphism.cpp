#include <doctest.h>

#include "embhom/automorphism.hpp"

using namespace embhom;

namespace {

const std::set<VertexId> kV4{0, 1, 2, 3};

Hypergraph on_v4(std::initializer_list<Hyperedge> edges) { return Hypergraph(kV4, std::set<Hyperedge>(edges)); }

struct Orders {
  std::size_t homeo, stab, aut;
  bool operator==(const Orders&) const = default;
};

Orders orders(const Hypergraph& h) {
  const auto r = aut_group(h);
  CHECK(r.ok());
  return {r.homeo_order, r.stab_order, r.aut_order};
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation a({1, 2, 0});
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.cycles().size() == 1);
  CHECK_THROWS_AS(Permutation({0, 0}), DomainError);
  CHECK_THROWS_AS(PermutationGroup::from_elements(3, {Permutation::identity(3), a}), InvariantViolation);
  CHECK_THROWS_AS(PermutationGroup::from_elements(3, {a}), InvariantViolation);
  const auto c3 = PermutationGroup::from_elements(3, {Permutation::identity(3), a, a * a});
  CHECK(c3.order() == 3);
  CHECK(c3.generators().size() == 1);
}

TEST_CASE("group tables on four vertices") {
  CHECK(orders(on_v4({{1, 2}, {0, 2}, {0, 1}, {0, 1, 2}})) == Orders{6, 1, 6});
  CHECK(orders(on_v4({{0, 1}, {2, 3}})) == Orders{8, 4, 2});
  CHECK(orders(on_v4({{0, 1}})) == Orders{4, 4, 1});
  CHECK(orders(on_v4({{0, 1, 2}, {1, 2, 3}})) == Orders{4, 2, 2});
}

TEST_CASE("complete uniform hypergraphs") {
  Hypergraph k2 = on_v4({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(orders(k2) == Orders{24, 1, 24});
  CHECK(orders(Hypergraph::from_edges({{0, 1, 2}})) == Orders{6, 6, 1});
}

TEST_CASE("empty hypergraph") {
  CHECK(orders(Hypergraph(kV4, {})) == Orders{24, 24, 1});
}

TEST_CASE("directed groups") {
  const auto h = Hyperdigraph(kV4, {DirectedHyperedge({0, 1}), DirectedHyperedge({2, 3})});
  const auto r = aut_group(h);
  CHECK(r.ok());
  CHECK(r.homeo_order == 2);
  CHECK(r.stab_order == 1);
  const auto lifted = lift(Hypergraph::from_edges({{0, 1}}));
  CHECK(stab_group(lifted).order() == 1);
  CHECK(stab_group(lifted).is_normal_in(stab_group(project(lifted))));
  CHECK(homeo_group(lifted).is_subgroup_of(homeo_group(project(lifted))));
}

TEST_CASE("group cap") {
  std::set<VertexId> v;
  for (VertexId i = 0; i < 11; ++i) v.insert(i);
  CHECK_THROWS_AS(homeo_group(Hypergraph(v, {})), ResourceError);
  CHECK(homeo_group(Hypergraph(kV4, {}), 4).order() == 24);
}

TEST_CASE("edge cycle text") {
  const auto h = on_v4({{0, 1}, {2, 3}});
  const auto r = aut_group(h);
  bool found = false;
  for (const auto& a : r.aut.elements()) {
    if (!a.is_identity()) found = edge_cycles_to_string(h, a) == "({0,1} {2,3})";
  }
  CHECK(found);
}

TEST_CASE("pi surjection") {
  CHECK(pi_surjection_check(lift(Hypergraph::from_edges({{0, 1}}))));
  CHECK(pi_surjection_check(lift(on_v4({{0, 1}, {2, 3}}))));
  CHECK(pi_surjection_check(Hyperdigraph()));
  CHECK_THROWS_AS(pi_surjection_check(Hyperdigraph::from_edges({{0, 1}})), DomainError);
  const auto directed = aut_group(lift(Hypergraph::from_edges({{0, 1}})));
  CHECK(directed.aut_order == 2);
}

TEST_CASE("subgroup identities") {
  CHECK(subgroup_identities(Hypergraph::from_edges({{0}, {1}, {0, 1}}), {0, 1}).ok());
  const auto r = subgroup_identities(Hypergraph::from_edges({{0, 1}, {0, 1, 2}}), {0, 1, 2});
  CHECK(r.ok());
  CHECK(subgroup_identities(on_v4({{0, 1, 2}, {1, 2, 3}}), kV4).ok());
  const auto single = subgroup_identities(Hypergraph::from_edges({{0, 1}}), {0, 1});
  CHECK(single.ok());
  CHECK(single.aut_max == 1);
  CHECK(single.aut_closure == 2);
}

TEST_CASE("isometry groups") {
  const auto discrete = MetricPointSample::from_matrix({0, 1, 2}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(isom_group(discrete).order() == 6);
  const auto square = MetricPointSample::euclidean(std::vector<VertexId>{0, 1, 2, 3},
                                                   std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(isom_group(square).order() == 8);
  const auto line = MetricPointSample::euclidean(std::vector<VertexId>{0, 1, 2},
                                                 std::vector<std::vector<double>>{{0}, {1}, {3}});
  CHECK(isom_group(line).order() == 1);

  const auto r = aut_isom(on_v4({{0, 1}, {2, 3}}), square);
  CHECK(r.normal);
  CHECK(r.isom_homeo_order == 4);
  CHECK(r.isom_stab_order == 2);
  CHECK(r.aut_order == 2);
  CHECK_THROWS_AS(aut_isom(Hypergraph::from_edges({{0, 1}}), square), DomainError);
}

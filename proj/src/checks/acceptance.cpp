#include "embhom/checks/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "embhom/automorphism.hpp"
#include "embhom/bundle_order.hpp"
#include "embhom/checks/dense_oracle.hpp"
#include "embhom/checks/random.hpp"
#include "embhom/embedded.hpp"
#include "embhom/io.hpp"
#include "embhom/persistence.hpp"

namespace embhom::checks {

namespace {

using random::Rng;
using random::uniform;

constexpr double kPi = std::numbers::pi;
constexpr double kDensities[] = {0.1, 0.25, 0.4, 0.6};
const RationalField Q;

// Even i: independent subsets at a varying density. Odd i: a few random edges.
Hypergraph mixed_hypergraph(Rng& rng, std::size_t i, std::size_t nv, std::size_t max_card) {
  if (i % 2 == 0) return random::dense_hypergraph(rng, nv, max_card, kDensities[(i / 2) % 4]);
  return random::hypergraph(rng, nv, max_card, uniform(rng, 1, 3 + 3 * (i / 2 % 4)));
}

// Dense words stop at length 3 so closures stay small.
Hyperdigraph mixed_hyperdigraph(Rng& rng, std::size_t i, std::size_t nv, std::size_t max_card) {
  if (i % 2 == 0) return random::dense_hyperdigraph(rng, std::min<std::size_t>(nv, 6), std::min<std::size_t>(max_card, 3),
                                                    kDensities[(i / 2) % 4] / 2);
  return random::hyperdigraph(rng, nv, max_card, uniform(rng, 1, 2 + 2 * (i / 2 % 4)));
}

// Counts instances and keeps the first failure message.
struct Tally {
  std::size_t instances = 0;
  std::size_t nontrivial = 0;  // instances with homology above degree 0
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  std::string summary() const {
    std::ostringstream s;
    s << failures << " failures";
    if (failures) s << "; first: " << first_failure;
    return s.str();
  }
};

template <EdgeOrder O>
oracle::Cells cells(const BasicHypergraph<O>& h) {
  oracle::Cells out;
  for (const auto& e : h.edges()) out[e.size()].push_back({e.vertices().begin(), e.vertices().end()});
  return out;
}

template <class Body>
CriterionResult timed(int id, std::string name, Body body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::size_t> padded(std::vector<std::size_t> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

// Quasi-iso plus dense-oracle agreement for one instance.
template <EdgeOrder O>
void check_quasi_iso(const BasicHypergraph<O>& h, Tally& t) {
  ++t.instances;
  const auto ec = embedded_complexes(Q, h);
  const auto rep = compare_homology(ec.inf.complex, ec.sup.complex, inclusion_map(ec.inf, ec.sup));
  t.check(rep.is_iso, "not a quasi-isomorphism on " + h.to_string());
  for (std::size_t n = 1; n < rep.betti_inf.size(); ++n) {
    if (rep.betti_inf[n]) {
      ++t.nontrivial;
      break;
    }
  }
  if (ec.ambient.complex.num_degrees() == 0) return;
  const std::size_t top = ec.ambient.complex.num_degrees() - 1;
  const auto o = oracle::embedded_oracle(cells(h), cells(delta_closure(h)), top);
  t.check(ec.inf.complex.dims() == o.inf_dims && ec.sup.complex.dims() == o.sup_dims,
          "chain dimensions differ from the dense oracle on " + h.to_string());
  t.check(padded(rep.betti_inf, top + 1) == o.inf_betti && padded(rep.betti_sup, top + 1) == o.sup_betti,
          "betti numbers differ from the dense oracle on " + h.to_string());
}

bool is_identity_span(const Subcomplex<RationalField>& s, const ChainComplex<RationalField>& ambient) {
  for (std::size_t n = 0; n < ambient.num_degrees(); ++n) {
    if (!(s.basis_matrix(n) == SparseMatrix<RationalField>::identity(Q, ambient.dim(n)))) return false;
  }
  return true;
}

}  // namespace

CriterionResult group_tables() {
  return timed(1, "group tables on four vertices", [](CriterionResult& r) {
    struct Case {
      const char* json;
      std::size_t homeo, stab, aut;
    };
    const Case cases[] = {
        {R"({"vertices":[0,1,2,3],"edges":[[1,2],[0,2],[0,1],[0,1,2]]})", 6, 1, 6},
        {R"({"vertices":[0,1,2,3],"edges":[[0,1],[2,3]]})", 8, 4, 2},
        {R"({"vertices":[0,1,2,3],"edges":[[0,1]]})", 4, 4, 1},
        {R"({"vertices":[0,1,2,3],"edges":[[0,1,2],[1,2,3]]})", 4, 2, 2},
    };
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string got;
    for (const auto& c : cases) {
      ++t.instances;
      const auto h = std::get<Hypergraph>(io::parse_hypergraph(c.json).graph);
      const auto a = aut_group(h);
      got += "(" + std::to_string(a.homeo_order) + "," + std::to_string(a.stab_order) + "," +
             std::to_string(a.aut_order) + ")";
      t.check(a.ok(), "group structure check failed on " + h.to_string());
      t.check(a.homeo_order == c.homeo && a.stab_order == c.stab && a.aut_order == c.aut,
              "wrong orders on " + h.to_string());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(secs < 1.0, "runtime over 1 s");
    r.passed = t.failures == 0;
    r.detail = got + "; " + t.summary();
  });
}

CriterionResult quasi_iso_suite(std::uint64_t seed) {
  return timed(2, "Inf/Sup quasi-isomorphism", [seed](CriterionResult& r) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed ^ 0x2);
    Tally und, dir;
    for (std::size_t i = 0; i < 200; ++i) {
      const std::size_t nv = 3 + i % 6;
      check_quasi_iso(mixed_hypergraph(rng, i, nv, 5), und);
    }
    for (std::size_t i = 0; i < 100; ++i) {
      const std::size_t nv = 3 + i % 6;
      check_quasi_iso(mixed_hyperdigraph(rng, i, nv, 5), dir);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = und.failures == 0 && dir.failures == 0 && secs < 60.0;
    r.detail = std::to_string(und.instances) + " hypergraphs (" + std::to_string(und.nontrivial) +
               " with higher homology, " + und.summary() + "), " + std::to_string(dir.instances) +
               " hyperdigraphs (" + std::to_string(dir.nontrivial) + " with higher homology, " + dir.summary() + ")";
    if (secs >= 60.0) r.detail += "; runtime over 60 s";
  });
}

CriterionResult simplicial_identity(std::uint64_t seed) {
  return timed(3, "simplicial identity", [seed](CriterionResult& r) {
    Rng rng(seed ^ 0x3);
    Tally t;
    for (std::size_t i = 0; i < 60; ++i) {
      const std::size_t nv = 3 + i % 5;
      const auto h = i % 2 ? random::simplicial_complex(rng, nv, 4, uniform(rng, 1, 6))
                           : lower_associated(random::dense_hypergraph(rng, nv, 3 + i / 2 % 2, 0.6 + 0.1 * (i / 2 % 4)));
      ++t.instances;
      const auto ec = embedded_complexes(Q, h);
      const auto& amb = ec.ambient.complex;
      t.check(ec.inf.complex == amb && ec.sup.complex == amb && is_identity_span(ec.inf, amb) &&
                  is_identity_span(ec.sup, amb),
              "Inf or Sup differs from the ambient on " + h.to_string());
      t.check(four_term_sequence(Q, h).all_identity, "four-term maps are not identities on " + h.to_string());
      if (amb.num_degrees() == 0) continue;
      const auto b = betti(amb);
      if (std::any_of(b.begin() + 1, b.end(), [](std::size_t x) { return x > 0; })) ++t.nontrivial;
      const std::size_t top = amb.num_degrees() - 1;
      t.check(padded(b, top + 1) == oracle::simplicial_betti(cells(h), top),
              "homology differs from the dense oracle on " + h.to_string());
    }
    r.passed = t.failures == 0;
    r.detail = std::to_string(t.instances) + " complexes (" + std::to_string(t.nontrivial) +
               " with higher homology), " + t.summary();
  });
}

CriterionResult quotient_quasi_iso(std::uint64_t seed) {
  return timed(4, "quotient quasi-isomorphism", [seed](CriterionResult& r) {
    Rng rng(seed ^ 0x4);
    Tally t;
    for (std::size_t i = 0; i < 36; ++i) {
      const std::size_t nv = 2 + i % 5;
      const auto h = mixed_hypergraph(rng, i, nv, nv);
      ++t.instances;
      const auto q = verify_quotient_quasi_iso(Q, h, h.vertices(), nv - 1);
      t.check(q.betti_mod_inf == q.betti_mod_sup, "quotient betti numbers differ on " + h.to_string());
      t.check(q.surjective, "q is not surjective on " + h.to_string());
      t.check(q.is_iso, "q is not a quasi-isomorphism on " + h.to_string());
    }
    r.passed = t.failures == 0;
    r.detail = std::to_string(t.instances) + " hypergraphs, " + t.summary();
  });
}

CriterionResult covering_sheets(std::uint64_t seed) {
  return timed(5, "covering sheets", [seed](CriterionResult& r) {
    Rng rng(seed ^ 0x5);
    Tally t;
    std::size_t surjection_checks = 0;
    for (std::size_t i = 0; i < 60; ++i) {
      const std::size_t nv = 2 + i % 6;
      const auto h = random::hypergraph(rng, nv, 4, uniform(rng, 1, 8));
      ++t.instances;
      const auto l = lift(h);
      t.check(is_sigma_invariant(l), "lift is not sigma-invariant on " + h.to_string());
      t.check(project(l) == h, "project(lift h) != h on " + h.to_string());
      std::size_t factorial = 1;
      for (std::size_t n = 1; n <= 4; ++n) {
        factorial *= n;
        t.check(l.grade(n).size() == factorial * h.grade(n).size(),
                "sheet count fails in cardinality " + std::to_string(n) + " on " + h.to_string());
      }
      if (nv <= 5) {
        ++surjection_checks;
        t.check(pi_surjection_check(l), "pi surjection fails on " + h.to_string());
      }
    }
    r.passed = t.failures == 0;
    r.detail = std::to_string(t.instances) + " hypergraphs, " + std::to_string(surjection_checks) +
               " surjection checks, " + t.summary();
  });
}

CriterionResult circle_emptiness(std::uint64_t seed) {
  return timed(6, "circle emptiness", [seed](CriterionResult& r) {
    Tally t;
    std::vector<VertexId> ids;
    std::vector<double> angles;
    for (std::size_t i = 0; i < 12; ++i) {
      ids.push_back(static_cast<VertexId>(i));
      angles.push_back(2 * kPi * static_cast<double>(i) / 12.0);
    }
    const auto twelve = MetricPointSample::circle(ids, angles);
    ++t.instances;
    t.check(!hard_sphere(twelve, kPi / 3 - 1e-6, 3).grade(3).empty(), "level 3 empty just below pi/3");
    t.check(hard_sphere(twelve, kPi / 3, 3).grade(3).empty(), "level 3 nonempty at pi/3");

    Rng rng(seed ^ 0x6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < 60; ++i) {
      const auto c = random::circle_sample(rng, uniform(rng, 2, 10));
      ++t.instances;
      for (std::size_t n = 2; n <= 5; ++n) {
        const double base = kPi / static_cast<double>(n);
        for (double r0 : {base, base + 1e-6, base * (1 + unit(rng)), kPi}) {
          t.check(hard_sphere(c, r0, n).grade(n).empty(),
                  "level " + std::to_string(n) + " nonempty at r >= pi/n on sample #" + std::to_string(i));
        }
        t.check(emptiness_threshold(c, n) <= base + c.tolerance(),
                "threshold above pi/n on sample #" + std::to_string(i));
      }
    }
    r.passed = t.failures == 0;
    r.detail = std::to_string(t.instances) + " samples, " + t.summary();
  });
}

CriterionResult persistence_sanity(std::uint64_t seed) {
  return timed(7, "persistence sanity", [seed](CriterionResult& r) {
    Tally t;
    const auto triangle = MetricPointSample::from_matrix({0, 1, 2}, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
    const auto steps = build_filtration(triangle, 2);
    t.check(steps.size() == 2 && steps[0].lower == 1.0 && steps[1].upper == 1.0,
            "triangle filtration does not switch at s/2");
    for (auto kind : {EmbeddedKind::inf, EmbeddedKind::sup}) {
      const auto table = persistent_betti(steps, kind);
      const auto d0 = table.find(0, 0, 1);
      const auto d1 = table.find(1, 0, 1);
      t.check(d0 && d0->betti_from == 3 && d0->betti_to == 1 && d0->rank == 1, "degree-0 triangle entry wrong");
      t.check(d1 && d1->betti_from == 0 && d1->betti_to == 1, "degree-1 triangle entry wrong");
    }

    Rng rng(seed ^ 0x7);
    std::size_t samples = 0;
    for (std::size_t s = 0; s < 25; ++s) {
      const auto points = random::plane_sample(rng, 5);
      ++samples;
      const auto st = build_filtration(points, 3);
      for (auto kind : {EmbeddedKind::inf, EmbeddedKind::sup}) {
        const auto table = persistent_betti(st, kind, true);
        const std::string where = "sample #" + std::to_string(s);
        for (std::size_t d = 0; d < table.num_degrees; ++d) {
          auto rk = [&](std::size_t i, std::size_t j) { return table.find(d, i, j).value().rank; };
          for (std::size_t i = 0; i < st.size(); ++i) {
            const auto self = table.find(d, i, i).value();
            t.check(self.rank == self.betti_from, "rank(i,i) != beta_i on " + where);
            for (std::size_t j = i; j < st.size(); ++j) {
              const auto e = table.find(d, i, j).value();
              t.check(e.rank <= std::min(e.betti_from, e.betti_to), "rank above betti on " + where);
              for (std::size_t k = j; k < st.size(); ++k) {
                t.check(rk(i, k) <= std::min(rk(i, j), rk(j, k)), "composition monotonicity fails on " + where);
              }
            }
          }
        }
      }
    }
    t.instances = samples;
    r.passed = t.failures == 0;
    r.detail = "triangle ok, " + std::to_string(samples) + " random samples, " + t.summary();
  });
}

CriterionResult laplacian_betti(std::uint64_t seed) {
  return timed(8, "Laplacian and Betti numbers", [seed](CriterionResult& r) {
    Rng rng(seed ^ 0x8);
    Tally t;
    auto check = [&](const ChainComplex<RationalField>& c, const std::string& what) {
      const auto b = betti(c);
      for (std::size_t n = 0; n < c.num_degrees(); ++n) {
        t.check(hodge_laplacian(c, n).harmonic_rank == b[n],
                "harmonic rank != betti in degree " + std::to_string(n) + " on " + what);
      }
    };
    for (std::size_t i = 0; i < 60; ++i) {
      const std::size_t nv = 3 + i % 5;
      ++t.instances;
      if (i % 3 == 2) {
        const auto h = mixed_hyperdigraph(rng, i, nv, 4);
        const auto ec = embedded_complexes(Q, h);
        check(ec.inf.complex, h.to_string());
        check(ec.sup.complex, h.to_string());
      } else {
        const auto h = mixed_hypergraph(rng, i, nv, 4);
        const auto ec = embedded_complexes(Q, h);
        check(ec.inf.complex, h.to_string());
        check(ec.sup.complex, h.to_string());
      }
    }
    r.passed = t.failures == 0;
    r.detail = std::to_string(2 * t.instances) + " complexes, " + t.summary();
  });
}

CriterionResult bundle_arithmetic() {
  return timed(9, "bundle arithmetic", [](CriterionResult& r) {
    Tally t;
    t.check(rho(4) == 3, "rho(4) != 3");
    t.check(rho(10) == 6, "rho(10) != 6");
    t.check(a_coeff(3, 3) == 12, "a_coeff(3,3) != 12");
    t.check(a_coeff(4, 5) == 60, "a_coeff(4,5) != 60");
    for (std::uint64_t genus : {1u, 2u, 5u}) {
      for (std::uint64_t n = 1; n <= 12; ++n) {
        SpaceDescriptor s{SpaceKind::surface, genus, 2, 0, std::nullopt};
        t.check(order_bound(s, n).divides == 4,
                "surface bound != 4 at genus " + std::to_string(genus) + ", n " + std::to_string(n));
      }
    }
    t.check(order_bound({SpaceKind::sphere, 0, 2, 0, std::nullopt}, 2).divides == 4, "sphere(2), n 2 != 4");
    t.check(embedding_dimension_bound(2, 2) == 4, "embedding bound (2,2) != 4");
    r.passed = t.failures == 0;
    r.detail = t.summary();
  });
}

CriterionResult structural_invariants(std::uint64_t seed) {
  return timed(10, "structural invariants", [seed](CriterionResult& r) {
    Rng rng(seed ^ 0xa);
    Tally t;

    // d^2 = 0 on every complex built from random instances.
    std::size_t complexes = 0;
    auto d2 = [&](const ChainComplex<RationalField>& c, const std::string& what) {
      ++complexes;
      t.check(!c.d_squared_failure(), "d^2 != 0 on " + what);
    };
    for (std::size_t i = 0; i < 30; ++i) {
      const std::size_t nv = 2 + i % 5;
      const auto h = mixed_hypergraph(rng, i, nv, nv);
      const auto ec = embedded_complexes(Q, h, std::optional(ambient_full<RationalField, EdgeOrder::unordered>(
                                                   Q, h.vertices(), nv - 1)));
      const auto& c = ec.ambient.complex;
      d2(c, h.to_string());
      d2(ec.inf.complex, h.to_string());
      d2(ec.sup.complex, h.to_string());
      d2(quotient_complex(c, ec.inf).complex, h.to_string());
      d2(quotient_complex(c, ec.sup).complex, h.to_string());
      d2(reversed_dual(c), h.to_string());
      const auto g = random::hyperdigraph(rng, nv, 4, uniform(rng, 1, 6));
      const auto eg = embedded_complexes(Q, g);
      d2(eg.ambient.complex, g.to_string());
      d2(eg.inf.complex, g.to_string());
      d2(eg.sup.complex, g.to_string());
    }

    // Delta identity on fuzzed face-closed bases.
    std::size_t unordered_elements = 0, ordered_elements = 0;
    while (unordered_elements < 1000) {
      const auto h = delta_closure(random::hypergraph(rng, uniform(rng, 3, 8), 5, uniform(rng, 1, 6)));
      const auto d = delta_set_of(GradedBasis<EdgeOrder::unordered>(h.edges()));
      for (auto s : d.sizes) unordered_elements += s;
      t.check(delta_identity_holds(d), "delta identity fails on " + h.to_string());
    }
    while (ordered_elements < 1000) {
      const auto h = delta_closure(random::hyperdigraph(rng, uniform(rng, 3, 8), 5, uniform(rng, 1, 6)));
      auto d = delta_set_of(GradedBasis<EdgeOrder::ordered>(h.edges()));
      for (auto s : d.sizes) ordered_elements += s;
      t.check(delta_identity_holds(d), "delta identity fails on " + h.to_string());
      // Negative control: swapping two faces of a 2-cell must be detected.
      if (d.faces.size() > 2 && !d.faces[2].empty()) {
        std::swap(d.faces[2][0][0], d.faces[2][0][1]);
        t.check(!delta_identity_holds(d), "corrupted face map not detected on " + h.to_string());
      }
    }

    // Ambient independence.
    std::size_t ambient_pairs = 0;
    for (std::size_t i = 0; i < 30; ++i) {
      const std::size_t nv = 2 + i % 5;
      const auto h = mixed_hypergraph(rng, i, nv, 4);
      auto vertices = h.vertices();
      vertices.insert(static_cast<VertexId>(nv));
      const auto closure = embedded_complexes(Q, h);
      const auto full = embedded_complexes(
          Q, h, std::optional(ambient_full<RationalField, EdgeOrder::unordered>(Q, vertices, h.max_cardinality())));
      ++ambient_pairs;
      t.check(padded(betti(closure.inf.complex), 6) == padded(betti(full.inf.complex), 6) &&
                  padded(betti(closure.sup.complex), 6) == padded(betti(full.sup.complex), 6),
              "betti numbers depend on the ambient for " + h.to_string());
    }
    for (std::size_t i = 0; i < 30; ++i) {
      const std::size_t nv = 2 + i % 4;
      const auto g = mixed_hyperdigraph(rng, i, nv, 4);
      auto bigger = g.edges();
      const auto extra = random::hyperdigraph(rng, nv + 1, 4, 3);
      bigger.insert(extra.edges().begin(), extra.edges().end());
      const auto big_ambient = ambient_closure(Q, Hyperdigraph::from_edges(bigger));
      const auto closure = embedded_complexes(Q, g);
      const auto wide = embedded_complexes(Q, g, std::optional(big_ambient));
      ++ambient_pairs;
      t.check(padded(betti(closure.inf.complex), 6) == padded(betti(wide.inf.complex), 6) &&
                  padded(betti(closure.sup.complex), 6) == padded(betti(wide.sup.complex), 6),
              "betti numbers depend on the ambient for " + g.to_string());
      if (nv <= 4) {
        const auto full = embedded_complexes(
            Q, g, std::optional(ambient_full<RationalField, EdgeOrder::ordered>(Q, g.vertices(), nv - 1)));
        ++ambient_pairs;
        t.check(padded(betti(closure.inf.complex), 6) == padded(betti(full.inf.complex), 6) &&
                    padded(betti(closure.sup.complex), 6) == padded(betti(full.sup.complex), 6),
                "betti numbers depend on the ambient for " + g.to_string());
      }
    }

    r.passed = t.failures == 0;
    r.detail = std::to_string(complexes) + " complexes, " + std::to_string(unordered_elements) + "+" +
               std::to_string(ordered_elements) + " delta-set elements, " + std::to_string(ambient_pairs) +
               " ambient pairs, " + t.summary();
  });
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  return {group_tables(),         quasi_iso_suite(seed),    simplicial_identity(seed), quotient_quasi_iso(seed),
          covering_sheets(seed),  circle_emptiness(seed),   persistence_sanity(seed),  laplacian_betti(seed),
          bundle_arithmetic(),    structural_invariants(seed)};
}

}  // namespace embhom::checks

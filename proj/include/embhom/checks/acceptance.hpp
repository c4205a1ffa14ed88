#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "embhom/hypergraph.hpp"

namespace embhom::checks {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // deterministic for a fixed seed
  double seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

CriterionResult group_tables();
CriterionResult quasi_iso_suite(std::uint64_t seed);
CriterionResult simplicial_identity(std::uint64_t seed);
CriterionResult quotient_quasi_iso(std::uint64_t seed);
CriterionResult covering_sheets(std::uint64_t seed);
CriterionResult circle_emptiness(std::uint64_t seed);
CriterionResult persistence_sanity(std::uint64_t seed);
CriterionResult laplacian_betti(std::uint64_t seed);
CriterionResult bundle_arithmetic();
CriterionResult structural_invariants(std::uint64_t seed);

// Criteria 1-10 in order.
std::vector<CriterionResult> run_all(std::uint64_t seed);

// Drops edges one at a time while `fails` stays true, until no single
// removal keeps it failing.
template <EdgeOrder O>
BasicHypergraph<O> shrink_edges(BasicHypergraph<O> h, const std::function<bool(const BasicHypergraph<O>&)>& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : h.edges()) {
      auto edges = h.edges();
      edges.erase(e);
      auto smaller = h.with_edges(std::move(edges));
      if (fails(smaller)) {
        h = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return h;
}

}  // namespace embhom::checks

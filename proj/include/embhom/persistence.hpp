#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "embhom/hypergraph.hpp"
#include "embhom/metric.hpp"

namespace embhom {

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

// Hard-sphere hypergraph on one interval of radii where it is constant. The
// interval is open at both ends except that the last step includes r = 0.
struct FiltrationStep {
  double lower = 0.0;
  double upper = kInfiniteRadius;
  double representative = 0.0;
  Hypergraph hypergraph;
};

// Steps ordered by decreasing radius, hence increasing hypergraphs.
std::vector<FiltrationStep> build_filtration(const MetricPointSample& points, std::size_t n_max);

enum class EmbeddedKind { inf, sup };

struct PersistenceEntry {
  std::size_t degree;
  std::size_t from;  // step index
  std::size_t to;    // step index, from <= to
  double r_from;
  double r_to;
  std::size_t betti_from;
  std::size_t betti_to;
  std::size_t rank;
};

struct PersistentBettiTable {
  std::size_t num_steps = 0;
  std::size_t num_degrees = 0;
  std::vector<PersistenceEntry> entries;

  // Entry for (degree, from, to), if it was computed.
  std::optional<PersistenceEntry> find(std::size_t degree, std::size_t from, std::size_t to) const;
};

// Ranks of H_n(step i) -> H_n(step j) over Q. Consecutive pairs (and i == j)
// always; every pair i <= j when all_pairs is set. Throws DomainError when
// the steps are not nested.
PersistentBettiTable persistent_betti(const std::vector<FiltrationStep>& steps, EmbeddedKind kind,
                                      bool all_pairs = false);

struct Bar {
  std::size_t degree;
  std::size_t birth_step;
  std::optional<std::size_t> death_step;  // first step where the class is gone
  double birth_radius;
  std::optional<double> death_radius;
  std::size_t multiplicity;
};

// Interval decomposition by inclusion-exclusion over an all-pairs table.
std::vector<Bar> barcode(const PersistentBettiTable& table, const std::vector<FiltrationStep>& steps);

// Least r at which the level-n hard-sphere hypergraph of a circle sample is
// empty: half the largest achievable minimum pairwise distance among n
// points. Infinite for n = 1, zero when there are fewer than n points.
double emptiness_threshold(const MetricPointSample& points, std::size_t n);

}  // namespace embhom

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "embhom/hypergraph.hpp"

namespace embhom {

enum class MetricKind { euclidean, matrix, circle };

// A finite point sample with one of three metrics. Euclidean coordinates and
// distance matrices are held as exact rationals and compared exactly (squared
// distances for coordinates). Circle samples store angles in radians and
// compare arc lengths with an absolute tolerance; distances within the
// tolerance of each other count as equal. The triangle inequality is not
// required of distance matrices.
class MetricPointSample {
 public:
  static constexpr double kDefaultCircleTolerance = 1e-9;

  static MetricPointSample euclidean(std::vector<VertexId> ids, std::vector<std::vector<mpq_class>> coords);
  static MetricPointSample euclidean(std::vector<VertexId> ids, const std::vector<std::vector<double>>& coords);
  static MetricPointSample from_matrix(std::vector<VertexId> ids, const std::vector<std::vector<double>>& d);
  static MetricPointSample circle(std::vector<VertexId> ids, std::vector<double> angles,
                                  double tolerance = kDefaultCircleTolerance);

  MetricKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  std::set<VertexId> vertex_set() const { return {ids_.begin(), ids_.end()}; }
  double tolerance() const noexcept { return tolerance_; }

  // Distance between points i and j (by position), as a double.
  double distance(std::size_t i, std::size_t j) const;

  // Sign of d(i,j) - d(k,l).
  int compare_distances(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

  // True iff d(i,j) > 2r (by more than the tolerance for circle samples).
  bool separated(std::size_t i, std::size_t j, double r) const;

 private:
  MetricPointSample() = default;
  void validate_ids() const;

  // Exact squared distance (euclidean) or exact distance (matrix).
  mpq_class exact_key(std::size_t i, std::size_t j) const;

  MetricKind kind_ = MetricKind::euclidean;
  std::vector<VertexId> ids_;
  std::vector<std::vector<mpq_class>> coords_;
  std::vector<std::vector<mpq_class>> matrix_;
  std::vector<double> angles_;
  double tolerance_ = 0.0;
};

// Cliques of size 1..n_max in the graph of pairs with d > 2r. Vertex set is
// every sample point.
Hypergraph hard_sphere(const MetricPointSample& points, double r, std::size_t n_max);

// Pairs grouped into classes of equal distance, in increasing order.
struct DistanceClasses {
  std::vector<double> distances;             // one per class
  std::vector<std::vector<std::size_t>> of;  // of[i][j]: class of pair (i, j), i != j
};

DistanceClasses distance_classes(const MetricPointSample& points);

// Sorted distinct half-distances. Needs at least two points.
std::vector<double> critical_radii(const MetricPointSample& points, std::size_t n_max);

// Hard-sphere hypergraph in which exactly the pairs of class > threshold are
// separated (threshold counts classes, 0 separates every pair).
Hypergraph hard_sphere_above_class(const MetricPointSample& points, const DistanceClasses& classes,
                                   std::size_t threshold, std::size_t n_max);

}  // namespace embhom

#include "embhom/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace embhom {

namespace {

mpq_class exact(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value in point sample");
  mpq_class q(x);
  q.canonicalize();
  return q;
}

}  // namespace

void MetricPointSample::validate_ids() const {
  std::vector<VertexId> sorted = ids_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("point sample repeats a point id");
  }
}

MetricPointSample MetricPointSample::euclidean(std::vector<VertexId> ids,
                                               std::vector<std::vector<mpq_class>> coords) {
  if (ids.size() != coords.size()) throw DomainError("one coordinate row per point is required");
  MetricPointSample s;
  s.kind_ = MetricKind::euclidean;
  s.ids_ = std::move(ids);
  s.coords_ = std::move(coords);
  s.validate_ids();
  for (const auto& row : s.coords_) {
    if (row.size() != s.coords_.front().size()) throw DomainError("coordinate rows differ in dimension");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s.exact_key(i, j) == 0) throw DomainError("two points coincide");
    }
  }
  return s;
}

MetricPointSample MetricPointSample::euclidean(std::vector<VertexId> ids,
                                               const std::vector<std::vector<double>>& coords) {
  std::vector<std::vector<mpq_class>> q;
  for (const auto& row : coords) {
    std::vector<mpq_class> r;
    for (double x : row) r.push_back(exact(x));
    q.push_back(std::move(r));
  }
  return euclidean(std::move(ids), std::move(q));
}

MetricPointSample MetricPointSample::from_matrix(std::vector<VertexId> ids,
                                                 const std::vector<std::vector<double>>& d) {
  MetricPointSample s;
  s.kind_ = MetricKind::matrix;
  s.ids_ = std::move(ids);
  s.validate_ids();
  if (d.size() != s.size()) throw DomainError("distance matrix must be square with one row per point");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].size() != d.size()) throw DomainError("distance matrix must be square");
    std::vector<mpq_class> row;
    for (double x : d[i]) row.push_back(exact(x));
    s.matrix_.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (s.matrix_[i][i] != 0) throw DomainError("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (s.matrix_[i][j] != s.matrix_[j][i]) throw DomainError("distance matrix must be symmetric");
      if (s.matrix_[i][j] <= 0) throw DomainError("distinct points must have positive distance");
    }
  }
  return s;
}

MetricPointSample MetricPointSample::circle(std::vector<VertexId> ids, std::vector<double> angles,
                                            double tolerance) {
  if (ids.size() != angles.size()) throw DomainError("one angle per point is required");
  if (!(tolerance >= 0.0)) throw DomainError("circle tolerance must be non-negative");
  MetricPointSample s;
  s.kind_ = MetricKind::circle;
  s.ids_ = std::move(ids);
  s.validate_ids();
  s.tolerance_ = tolerance;
  const double two_pi = 2 * std::numbers::pi;
  for (double a : angles) {
    if (!std::isfinite(a)) throw DomainError("non-finite angle");
    double r = std::fmod(a, two_pi);
    if (r < 0) r += two_pi;
    s.angles_.push_back(r);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s.distance(i, j) <= tolerance) throw DomainError("two circle points coincide");
    }
  }
  return s;
}

mpq_class MetricPointSample::exact_key(std::size_t i, std::size_t j) const {
  if (kind_ == MetricKind::matrix) return matrix_[i][j];
  mpq_class s = 0;
  for (std::size_t k = 0; k < coords_[i].size(); ++k) {
    const mpq_class d = coords_[i][k] - coords_[j][k];
    s += d * d;
  }
  return s;
}

double MetricPointSample::distance(std::size_t i, std::size_t j) const {
  switch (kind_) {
    case MetricKind::euclidean:
      return std::sqrt(exact_key(i, j).get_d());
    case MetricKind::matrix:
      return matrix_[i][j].get_d();
    case MetricKind::circle: {
      const double d = std::fabs(angles_[i] - angles_[j]);
      return std::min(d, 2 * std::numbers::pi - d);
    }
  }
  return 0.0;
}

int MetricPointSample::compare_distances(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  if (kind_ == MetricKind::circle) {
    const double diff = distance(i, j) - distance(k, l);
    if (std::fabs(diff) <= tolerance_) return 0;
    return diff < 0 ? -1 : 1;
  }
  return cmp(exact_key(i, j), exact_key(k, l));
}

bool MetricPointSample::separated(std::size_t i, std::size_t j, double r) const {
  if (r < 0) throw DomainError("radius must be non-negative");
  if (i == j) return false;
  if (std::isinf(r)) return false;
  switch (kind_) {
    case MetricKind::euclidean: {
      const mpq_class two_r = 2 * exact(r);
      return exact_key(i, j) > two_r * two_r;
    }
    case MetricKind::matrix:
      return matrix_[i][j] > 2 * exact(r);
    case MetricKind::circle:
      return distance(i, j) - 2 * r > tolerance_;
  }
  return false;
}

namespace {

// Extends each clique by later vertices only, so every clique is produced once.
void grow_cliques(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& clique,
                  std::size_t n_max, const std::vector<VertexId>& ids, std::set<Hyperedge>& out) {
  std::vector<VertexId> verts;
  for (std::size_t i : clique) verts.push_back(ids[i]);
  out.insert(Hyperedge::canonical(std::move(verts)));
  if (clique.size() == n_max) return;
  for (std::size_t v = clique.back() + 1; v < adj.size(); ++v) {
    bool ok = true;
    for (std::size_t u : clique) ok = ok && adj[u][v];
    if (!ok) continue;
    clique.push_back(v);
    grow_cliques(adj, clique, n_max, ids, out);
    clique.pop_back();
  }
}

Hypergraph cliques(const MetricPointSample& points, const std::vector<std::vector<bool>>& adj, std::size_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::set<Hyperedge> out;
  std::vector<std::size_t> clique;
  for (std::size_t v = 0; v < points.size(); ++v) {
    clique.assign(1, v);
    grow_cliques(adj, clique, n_max, points.ids(), out);
  }
  return Hypergraph(points.vertex_set(), std::move(out));
}

}  // namespace

Hypergraph hard_sphere(const MetricPointSample& points, double r, std::size_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::vector<std::vector<bool>> adj(points.size(), std::vector<bool>(points.size(), false));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) adj[i][j] = adj[j][i] = points.separated(i, j, r);
  }
  return cliques(points, adj, n_max);
}

DistanceClasses distance_classes(const MetricPointSample& points) {
  const std::size_t n = points.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  if (points.kind() == MetricKind::circle) {
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return points.distance(a.first, a.second) < points.distance(b.first, b.second);
    });
  } else {
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return points.compare_distances(a.first, a.second, b.first, b.second) < 0;
    });
  }
  DistanceClasses c;
  c.of.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    // Tolerance classes chain through neighbours in sorted order.
    if (k == 0 || points.compare_distances(pairs[k - 1].first, pairs[k - 1].second, i, j) != 0) {
      c.distances.push_back(points.distance(i, j));
    }
    c.of[i][j] = c.of[j][i] = c.distances.size();
  }
  return c;
}

std::vector<double> critical_radii(const MetricPointSample& points, std::size_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (points.size() < 2) throw DomainError("critical radii need at least two points");
  std::vector<double> out;
  for (double d : distance_classes(points).distances) out.push_back(d / 2);
  return out;
}

Hypergraph hard_sphere_above_class(const MetricPointSample& points, const DistanceClasses& classes,
                                   std::size_t threshold, std::size_t n_max) {
  std::vector<std::vector<bool>> adj(points.size(), std::vector<bool>(points.size(), false));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) adj[i][j] = i != j && classes.of[i][j] > threshold;
  }
  return cliques(points, adj, n_max);
}

}  // namespace embhom

#include "embhom/persistence.hpp"

#include <algorithm>
#include <cmath>

#include "embhom/embedded.hpp"

namespace embhom {

std::vector<FiltrationStep> build_filtration(const MetricPointSample& points, std::size_t n_max) {
  if (points.size() == 0) throw DomainError("filtration needs at least one point");
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (points.size() == 1) {
    return {FiltrationStep{0.0, kInfiniteRadius, 0.0, hard_sphere(points, 0.0, n_max)}};
  }
  const DistanceClasses classes = distance_classes(points);
  const std::size_t k = classes.distances.size();
  std::vector<double> rho;
  for (double d : classes.distances) rho.push_back(d / 2);

  std::vector<FiltrationStep> steps;
  for (std::size_t t = k + 1; t-- > 0;) {
    FiltrationStep s;
    s.lower = t == 0 ? 0.0 : rho[t - 1];
    s.upper = t == k ? kInfiniteRadius : rho[t];
    s.representative = t == k ? 2 * rho[k - 1] : (s.lower + s.upper) / 2;
    s.hypergraph = hard_sphere_above_class(points, classes, t, n_max);
    steps.push_back(std::move(s));
  }
  return steps;
}

std::optional<PersistenceEntry> PersistentBettiTable::find(std::size_t degree, std::size_t from,
                                                           std::size_t to) const {
  for (const auto& e : entries) {
    if (e.degree == degree && e.from == from && e.to == to) return e;
  }
  return std::nullopt;
}

PersistentBettiTable persistent_betti(const std::vector<FiltrationStep>& steps, EmbeddedKind kind,
                                      bool all_pairs) {
  PersistentBettiTable table;
  table.num_steps = steps.size();
  if (steps.empty()) return table;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (!steps[i].hypergraph.edges_subset_of(steps[i + 1].hypergraph)) {
      throw DomainError("filtration is not nested at step " + std::to_string(i));
    }
  }
  const RationalField q;
  // One ambient for every step keeps the inclusions literal.
  const auto ambient = ambient_closure(q, steps.back().hypergraph);
  std::vector<Subcomplex<RationalField>> subs;
  for (const auto& s : steps) {
    auto ec = embedded_complexes(q, s.hypergraph, std::optional(ambient));
    subs.push_back(kind == EmbeddedKind::inf ? std::move(ec.inf) : std::move(ec.sup));
  }
  table.num_degrees = ambient.complex.num_degrees();
  std::vector<std::vector<std::size_t>> betti_of;
  for (const auto& s : subs) {
    auto b = betti(s.complex);
    b.resize(table.num_degrees, 0);
    betti_of.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (std::size_t j = i; j < steps.size(); ++j) {
      if (!all_pairs && j > i + 1) break;
      const auto f = inclusion_map(subs[i], subs[j]);
      for (std::size_t n = 0; n < table.num_degrees; ++n) {
        table.entries.push_back({n, i, j, steps[i].representative, steps[j].representative, betti_of[i][n],
                                 betti_of[j][n], induced_homology_rank(subs[i].complex, subs[j].complex, f, n)});
      }
    }
  }
  return table;
}

std::vector<Bar> barcode(const PersistentBettiTable& table, const std::vector<FiltrationStep>& steps) {
  const std::size_t m = table.num_steps;
  auto r = [&](std::size_t degree, long a, long b) -> long {
    if (a < 0 || b >= static_cast<long>(m) || a > b) return 0;
    auto e = table.find(degree, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    if (!e) throw DomainError("barcode needs an all-pairs persistence table");
    return static_cast<long>(e->rank);
  };
  std::vector<Bar> bars;
  for (std::size_t n = 0; n < table.num_degrees; ++n) {
    for (long i = 0; i < static_cast<long>(m); ++i) {
      for (long j = i + 1; j <= static_cast<long>(m); ++j) {
        const long mu = r(n, i, j - 1) - r(n, i, j) - r(n, i - 1, j - 1) + r(n, i - 1, j);
        if (mu < 0) throw InvariantViolation("negative barcode multiplicity", "degree " + std::to_string(n));
        if (mu == 0) continue;
        Bar b{n, static_cast<std::size_t>(i), std::nullopt, steps[i].representative, std::nullopt,
              static_cast<std::size_t>(mu)};
        if (j < static_cast<long>(m)) {
          b.death_step = static_cast<std::size_t>(j);
          b.death_radius = steps[j].representative;
        }
        bars.push_back(b);
      }
    }
  }
  return bars;
}

namespace {

constexpr double kMaxSubsetVisits = 2e7;

double binomial(std::size_t n, std::size_t k) {
  double c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

void best_spread(const MetricPointSample& p, std::size_t n, std::vector<std::size_t>& chosen, double current_min,
                 double& best) {
  if (current_min <= best) return;
  if (chosen.size() == n) {
    best = current_min;
    return;
  }
  const std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
  for (std::size_t v = start; v + (n - chosen.size()) <= p.size(); ++v) {
    double m = current_min;
    for (std::size_t u : chosen) m = std::min(m, p.distance(u, v));
    chosen.push_back(v);
    best_spread(p, n, chosen, m, best);
    chosen.pop_back();
  }
}

}  // namespace

double emptiness_threshold(const MetricPointSample& points, std::size_t n) {
  if (points.kind() != MetricKind::circle) throw DomainError("emptiness threshold needs a circle sample");
  if (n == 0) throw DomainError("level must be at least 1");
  if (n == 1) return kInfiniteRadius;
  if (points.size() < n) return 0.0;
  if (binomial(points.size(), n) > kMaxSubsetVisits) {
    throw ResourceError("too many point subsets for the emptiness threshold");
  }
  std::vector<std::size_t> chosen;
  double best = -1.0;
  best_spread(points, n, chosen, kInfiniteRadius, best);
  return best / 2;
}

}  // namespace embhom

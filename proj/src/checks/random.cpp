#include "embhom/checks/random.hpp"

#include <algorithm>
#include <numbers>

namespace embhom::random {

namespace {

std::vector<VertexId> random_word(Rng& rng, std::size_t nv, std::size_t max_card) {
  std::vector<VertexId> pool(nv);
  for (std::size_t i = 0; i < nv; ++i) pool[i] = static_cast<VertexId>(i);
  const std::size_t k = uniform(rng, 1, std::min(max_card, nv));
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[uniform(rng, i, nv - 1)]);
  pool.resize(k);
  return pool;
}

std::set<VertexId> all_vertices(std::size_t nv) {
  std::set<VertexId> v;
  for (std::size_t i = 0; i < nv; ++i) v.insert(static_cast<VertexId>(i));
  return v;
}

}  // namespace

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Hypergraph hypergraph(Rng& rng, std::size_t nv, std::size_t max_card, std::size_t edges) {
  std::set<Hyperedge> out;
  for (std::size_t i = 0; i < edges; ++i) out.insert(Hyperedge::canonical(random_word(rng, nv, max_card)));
  return Hypergraph(all_vertices(nv), std::move(out));
}

Hyperdigraph hyperdigraph(Rng& rng, std::size_t nv, std::size_t max_card, std::size_t edges) {
  std::set<DirectedHyperedge> out;
  for (std::size_t i = 0; i < edges; ++i) out.insert(DirectedHyperedge(random_word(rng, nv, max_card)));
  return Hyperdigraph(all_vertices(nv), std::move(out));
}

Hypergraph dense_hypergraph(Rng& rng, std::size_t nv, std::size_t max_card, double p) {
  std::bernoulli_distribution keep(p);
  std::set<Hyperedge> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nv); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < nv; ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(static_cast<VertexId>(i));
    }
    if (sub.size() <= max_card && keep(rng)) out.insert(Hyperedge(std::move(sub)));
  }
  return Hypergraph(all_vertices(nv), std::move(out));
}

Hyperdigraph dense_hyperdigraph(Rng& rng, std::size_t nv, std::size_t max_card, double p) {
  std::bernoulli_distribution keep(p);
  std::set<DirectedHyperedge> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nv); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < nv; ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(static_cast<VertexId>(i));
    }
    if (sub.size() > max_card) continue;
    do {
      if (keep(rng)) out.insert(DirectedHyperedge(sub));
    } while (std::next_permutation(sub.begin(), sub.end()));
  }
  return Hyperdigraph(all_vertices(nv), std::move(out));
}

Hypergraph simplicial_complex(Rng& rng, std::size_t nv, std::size_t max_card, std::size_t facets) {
  return delta_closure(hypergraph(rng, nv, max_card, facets));
}

MetricPointSample plane_sample(Rng& rng, std::size_t points) {
  std::vector<VertexId> ids;
  std::vector<std::vector<mpq_class>> coords;
  for (std::size_t i = 0; i < points; ++i) {
    ids.push_back(static_cast<VertexId>(i));
    coords.push_back({mpq_class(static_cast<long>(uniform(rng, 0, 40)), 4),
                      mpq_class(static_cast<long>(uniform(rng, 0, 40)), 4)});
  }
  // Redraw coincident points.
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (coords[i] == coords[j]) return plane_sample(rng, points);
    }
  }
  return MetricPointSample::euclidean(std::move(ids), std::move(coords));
}

MetricPointSample circle_sample(Rng& rng, std::size_t points) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<VertexId> ids;
  std::vector<double> angles;
  for (std::size_t i = 0; i < points; ++i) {
    ids.push_back(static_cast<VertexId>(i));
    angles.push_back(angle(rng));
  }
  return MetricPointSample::circle(std::move(ids), std::move(angles));
}

}  // namespace embhom::random

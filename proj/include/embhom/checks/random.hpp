#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "embhom/hypergraph.hpp"
#include "embhom/metric.hpp"

namespace embhom::random {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

// `edges` draws of a random edge on vertices 0..nv-1 with cardinality in
// 1..max_card. The vertex set is all of 0..nv-1.
Hypergraph hypergraph(Rng& rng, std::size_t nv, std::size_t max_card, std::size_t edges);
Hyperdigraph hyperdigraph(Rng& rng, std::size_t nv, std::size_t max_card, std::size_t edges);

// Each subset (or injective word) of 0..nv-1 with at most max_card
// elements is kept independently with probability p.
Hypergraph dense_hypergraph(Rng& rng, std::size_t nv, std::size_t max_card, double p);
Hyperdigraph dense_hyperdigraph(Rng& rng, std::size_t nv, std::size_t max_card, double p);

// Face closure of a random hypergraph.
Hypergraph simplicial_complex(Rng& rng, std::size_t nv, std::size_t max_card, std::size_t facets);

// Points with coordinates k/4, k in 0..40, so distance ties are common.
MetricPointSample plane_sample(Rng& rng, std::size_t points);

// Uniform angles in [0, 2pi).
MetricPointSample circle_sample(Rng& rng, std::size_t points);

}  // namespace embhom::random

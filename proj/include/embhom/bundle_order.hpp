#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "embhom/hypergraph.hpp"

namespace embhom {

// #{1 <= j <= k : j mod 8 in {0, 1, 2, 4}}
std::uint64_t rho(std::uint64_t k);

// 2^rho(m-1) times p^floor((m-1)/2) over odd primes p <= n.
mpz_class a_coeff(std::uint64_t m, std::uint64_t n);

enum class SpaceKind { surface, euclidean, sphere, real_projective, real_projective_times_euclidean };

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::euclidean;
  std::uint64_t genus = 0;                  // surface
  std::uint64_t m = 0;                      // dimension parameter
  std::uint64_t k = 0;                      // euclidean factor of the product
  std::optional<std::uint64_t> n_embed;     // embedding dimension of RP^m
};

struct OrderBound {
  mpz_class divides;
  std::vector<std::string> warnings;
};

// Reference values of the least N with RP^m embedded in R^N, for m = 1..4.
std::optional<std::uint64_t> known_projective_embedding_dimension(std::uint64_t m);

// The divisor bound on the bundle order for the given space and level n.
// Throws DomainError on invalid parameters or a missing embedding dimension.
OrderBound order_bound(const SpaceDescriptor& space, std::uint64_t n);

// Ambient dimension lower bound t + k for a k-regular embedding.
std::uint64_t embedding_dimension_bound(std::uint64_t t, std::uint64_t k);

// |h_n| = n! |project(h)_n| for every cardinality n. Throws DomainError
// unless h is closed under coordinate permutations.
bool sheet_count_check(const Hyperdigraph& h);

}  // namespace embhom

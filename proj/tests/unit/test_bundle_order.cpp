#include <doctest.h>

#include "embhom/bundle_order.hpp"

using namespace embhom;

TEST_CASE("rho") {
  CHECK(rho(0) == 0);
  CHECK(rho(4) == 3);
  CHECK(rho(10) == 6);
  for (std::uint64_t k = 0; k < 100; ++k) {
    std::uint64_t direct = 0;
    for (std::uint64_t j = 1; j <= k; ++j) {
      const auto r = j % 8;
      if (r == 0 || r == 1 || r == 2 || r == 4) ++direct;
    }
    CHECK(rho(k) == direct);
    CHECK(rho(k + 8) == rho(k) + 4);
  }
}

TEST_CASE("a coefficients") {
  CHECK(a_coeff(2, 2) == 2);
  CHECK(a_coeff(3, 3) == 12);
  CHECK(a_coeff(4, 5) == 60);
  CHECK(a_coeff(1, 50) == 1);
  CHECK_THROWS_AS(a_coeff(0, 1), DomainError);
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      CHECK(mpz_divisible_p(a_coeff(m + 1, n).get_mpz_t(), a_coeff(m, n).get_mpz_t()));
      CHECK(mpz_divisible_p(a_coeff(m, n + 1).get_mpz_t(), a_coeff(m, n).get_mpz_t()));
    }
  }
  // Exact for large arguments.
  CHECK(a_coeff(64, 64) > mpz_class("1000000000000000000000000000000"));
}

TEST_CASE("order bounds") {
  CHECK(order_bound({SpaceKind::surface, 2}, 5).divides == 4);
  CHECK(order_bound({SpaceKind::surface, 1}, 4).divides == 4);
  CHECK_THROWS_AS(order_bound({SpaceKind::surface, 0}, 4), DomainError);
  CHECK(order_bound({SpaceKind::euclidean, 0, 3}, 3).divides == 12);
  CHECK(order_bound({SpaceKind::euclidean, 0, 1}, 9).divides == 1);
  CHECK(order_bound({SpaceKind::sphere, 0, 2}, 2).divides == 4);

  // RP^2 embeds in R^4: 2^(rho(3) - rho(2)) * a(3, n).
  CHECK(order_bound({SpaceKind::real_projective, 0, 2}, 3).divides == 12);
  SpaceDescriptor rp6{SpaceKind::real_projective, 0, 6};
  CHECK_THROWS_AS(order_bound(rp6, 3), DomainError);
  rp6.n_embed = 4;
  CHECK_THROWS_AS(order_bound(rp6, 3), DomainError);
  rp6.n_embed = 11;
  CHECK(order_bound(rp6, 3).divides > 0);

  SpaceDescriptor prod{SpaceKind::real_projective_times_euclidean, 0, 2, 1};
  auto b = order_bound(prod, 3);
  CHECK(b.warnings.empty());
  CHECK(b.divides == mpz_class(8 * 3));  // 2^rho(4) * 3^1
  prod.k = 2;
  b = order_bound(prod, 3);
  CHECK(b.warnings.size() == 1);
  CHECK(b.divides == mpz_class(8 * 3));  // 2^rho(5) * 3^floor(3/2)
}

TEST_CASE("embedding dimension bound") {
  CHECK(embedding_dimension_bound(0, 3) == 3);
  CHECK(embedding_dimension_bound(2, 2) == 4);
  CHECK(embedding_dimension_bound(5, 4) == 9);
  CHECK_THROWS_AS(embedding_dimension_bound(1, 0), DomainError);
}

TEST_CASE("sheet counts") {
  CHECK(sheet_count_check(lift(Hypergraph::from_edges({{0, 1, 2}}))));
  CHECK(sheet_count_check(lift(Hypergraph::from_edges({{0, 1}, {2, 3}}))));
  CHECK_THROWS_AS(sheet_count_check(Hyperdigraph::from_edges({{0, 1}})), DomainError);
}

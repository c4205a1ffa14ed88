#include "embhom/bundle_order.hpp"

namespace embhom {

std::uint64_t rho(std::uint64_t k) {
  static constexpr std::uint64_t kPartial[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  return 4 * (k / 8) + kPartial[k % 8];
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

mpz_class pow2(std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class odd_prime_power_product(std::uint64_t n, std::uint64_t e) {
  mpz_class r = 1;
  for (std::uint64_t p = 3; p <= n; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), p, e);
    r *= f;
  }
  return r;
}

void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

mpz_class a_coeff(std::uint64_t m, std::uint64_t n) {
  require_positive(m, "m");
  require_positive(n, "n");
  return pow2(rho(m - 1)) * odd_prime_power_product(n, (m - 1) / 2);
}

std::optional<std::uint64_t> known_projective_embedding_dimension(std::uint64_t m) {
  switch (m) {
    case 1: return 2;
    case 2: return 4;
    case 3: return 5;
    case 4: return 8;
    default: return std::nullopt;
  }
}

OrderBound order_bound(const SpaceDescriptor& s, std::uint64_t n) {
  require_positive(n, "n");
  OrderBound out;
  auto embed_dim = [&]() {
    std::optional<std::uint64_t> dim = s.n_embed ? s.n_embed : known_projective_embedding_dimension(s.m);
    if (!dim) {
      throw DomainError("embedding dimension of RP^" + std::to_string(s.m) + " must be supplied");
    }
    if (*dim < s.m + 1) throw DomainError("embedding dimension must be at least m + 1");
    return *dim;
  };
  switch (s.kind) {
    case SpaceKind::surface:
      if (s.genus < 1) throw DomainError("surface genus must be at least 1");
      out.divides = 4;
      break;
    case SpaceKind::euclidean:
      require_positive(s.m, "m");
      out.divides = a_coeff(s.m, n);
      break;
    case SpaceKind::sphere:
      require_positive(s.m, "m");
      out.divides = pow2(rho(s.m) - rho(s.m - 1)) * a_coeff(s.m, n);
      break;
    case SpaceKind::real_projective: {
      require_positive(s.m, "m");
      const std::uint64_t big_n = embed_dim();
      out.divides = pow2(rho(big_n - 1) - rho(s.m)) * a_coeff(s.m + 1, n);
      break;
    }
    case SpaceKind::real_projective_times_euclidean: {
      require_positive(s.m, "m");
      require_positive(s.k, "k");
      const std::uint64_t big_n = embed_dim();
      const std::uint64_t top = s.m + s.k - 1;
      if (top % 2 != 0) {
        out.warnings.push_back("m + k is even; the odd-prime exponent (m+k-1)/2 was rounded down");
      }
      out.divides = pow2(rho(big_n + s.k - 1)) * odd_prime_power_product(n, top / 2);
      break;
    }
  }
  return out;
}

std::uint64_t embedding_dimension_bound(std::uint64_t t, std::uint64_t k) {
  require_positive(k, "k");
  return t + k;
}

bool sheet_count_check(const Hyperdigraph& h) {
  if (!is_sigma_invariant(h)) throw DomainError("hyperdigraph is not closed under coordinate permutations");
  const Hypergraph p = project(h);
  for (std::size_t n = 1; n <= h.max_cardinality(); ++n) {
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= n; ++i) fact *= i;
    if (h.grade(n).size() != fact * p.grade(n).size()) return false;
  }
  return true;
}

}  // namespace embhom

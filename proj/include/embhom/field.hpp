#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "embhom/errors.hpp"

namespace embhom {

// Field objects carry whatever runtime data the arithmetic needs (the prime
// for Z/p) so that matrices and reductions stay generic over the field.

// The rationals, arbitrary precision.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw DomainError("division by zero");
    return Element(1) / a;
  }
  std::string name() const { return "Q"; }
  std::string format(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// Z/p for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
    if (p >= (std::uint32_t{1} << 31)) throw DomainError("prime modulus must be below 2^31");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + b) % p_); }
  Element sub(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} + p_ - b) % p_);
  }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw DomainError("division by zero");
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint64_t e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Element>(result);
  }
  std::string name() const { return "Z/" + std::to_string(p_); }
  std::string format(Element a) const { return std::to_string(a); }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace embhom

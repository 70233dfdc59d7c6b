#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "minpoly/errors.hpp"

namespace minpoly {

/// A prime p with 2 <= p <= 2^16, checked at construction.
class PrimeModulus {
 public:
  static constexpr std::uint32_t kMax = 1u << 16;

  explicit PrimeModulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Residue class representative in {0, ..., p-1}. The modulus lives in the
/// PrimeField context that produced it.
struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(FieldElement, FieldElement) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.value; }

/// Arithmetic context for F_p. Every operation checks that its operands are
/// reduced modulo this field's p; an element from a larger field is rejected
/// with ModulusMismatch rather than silently reduced.
class PrimeField {
 public:
  explicit PrimeField(PrimeModulus p) noexcept : p_(p) {}
  explicit PrimeField(std::uint32_t p) : p_(p) {}

  PrimeModulus modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_.value(); }

  /// Reduces an arbitrary integer (negative allowed) into the field.
  FieldElement element(std::int64_t v) const noexcept;
  bool contains(FieldElement a) const noexcept { return a.value < p_.value(); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// Fermat inverse a^(p-2); throws DomainError on zero.
  FieldElement inverse(FieldElement a) const;
  /// Order-reversing involution a -> p-1-a.
  FieldElement involute(FieldElement a) const;

 private:
  void check(FieldElement a) const;

  PrimeModulus p_;
};

/// r-th digit of k in base p.
FieldElement digit(std::uint64_t k, unsigned r, PrimeModulus p) noexcept;

// Raw helpers on reduced uint32 residues, shared by the dense table code.
namespace detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;

}  // namespace detail

}  // namespace minpoly

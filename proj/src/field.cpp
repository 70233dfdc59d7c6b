#include "minpoly/field.hpp"

#include <string>

namespace minpoly {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p > kMax || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a prime in [2, 65536]");
  }
}

namespace detail {

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace detail

void PrimeField::check(FieldElement a) const {
  if (a.value >= p_.value()) {
    throw ModulusMismatch("element " + std::to_string(a.value) + " does not belong to F_" +
                          std::to_string(p_.value()));
  }
}

FieldElement PrimeField::element(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_.value());
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {detail::add_mod(a.value, b.value, p_.value())};
}

FieldElement PrimeField::sub(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {detail::sub_mod(a.value, b.value, p_.value())};
}

FieldElement PrimeField::neg(FieldElement a) const {
  check(a);
  return {detail::sub_mod(0, a.value, p_.value())};
}

FieldElement PrimeField::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {detail::mul_mod(a.value, b.value, p_.value())};
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  return {detail::pow_mod(a.value, e, p_.value())};
}

FieldElement PrimeField::inverse(FieldElement a) const {
  check(a);
  if (a.value == 0) throw DomainError("zero has no multiplicative inverse");
  return {detail::pow_mod(a.value, p_.value() - 2, p_.value())};
}

FieldElement PrimeField::involute(FieldElement a) const {
  check(a);
  return {p_.value() - 1 - a.value};
}

FieldElement digit(std::uint64_t k, unsigned r, PrimeModulus p) noexcept {
  const std::uint64_t base = p.value();
  for (unsigned i = 0; i < r && k > 0; ++i) k /= base;
  return FieldElement{static_cast<std::uint32_t>(k % base)};
}

}  // namespace minpoly

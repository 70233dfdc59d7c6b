#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "minpoly/oracle.hpp"
#include "minpoly/polynomial.hpp"

namespace minpoly::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'f00dULL);
  return gen;
}

inline std::uint32_t uniform(std::uint32_t bound) {
  return static_cast<std::uint32_t>(rng()() % bound);
}

inline Polynomial random_polynomial(PrimeModulus p, unsigned n) {
  std::vector<std::uint32_t> coeffs(table_size(p, n));
  for (auto& c : coeffs) c = uniform(p.value());
  return Polynomial(p, n, std::move(coeffs));
}

inline TruthTable random_table(PrimeModulus p, unsigned n) {
  std::vector<std::uint32_t> values(table_size(p, n));
  for (auto& v : values) v = uniform(p.value());
  return TruthTable(p, n, std::move(values));
}

inline std::vector<FieldElement> random_point(PrimeModulus p, unsigned n) {
  std::vector<FieldElement> x(n);
  for (auto& v : x) v.value = uniform(p.value());
  return x;
}

/// Evaluates by summing c * prod a_i^e_i over the raw coefficient table with
/// plain integer arithmetic. Shares no code with eval().
inline std::uint32_t brute_eval(const Polynomial& f, const std::vector<FieldElement>& a) {
  const std::uint64_t p = f.modulus().value();
  std::uint64_t acc = 0;
  const auto coeffs = f.coefficients();
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx] == 0) continue;
    std::uint64_t term = coeffs[idx];
    std::size_t rest = idx;
    for (unsigned i = 0; i < f.arity(); ++i) {
      const std::uint64_t e = rest % p;
      rest /= p;
      for (std::uint64_t k = 0; k < e; ++k) term = term * a[i].value % p;
    }
    acc = (acc + term) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

/// Sum over all points a of T(a) prod_i (1 - (x_i - a_i)^(p-1)), built with
/// ring operations only. Quadratic in the table size; tiny inputs only.
inline Polynomial delta_product_interpolation(const TruthTable& t) {
  const PrimeModulus p = t.modulus();
  const unsigned n = t.arity();
  Polynomial acc = zero(p, n);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.value(k).value == 0) continue;
    const auto a = point_at(k, p, n);
    Polynomial term = constant(t.value(k).value, p, n);
    for (unsigned i = 0; i < n; ++i) {
      term *= 1 - pow(variable(i, p, n) - static_cast<std::int64_t>(a[i].value), p.value() - 1);
    }
    acc += term;
  }
  return acc;
}

/// Calls fn(point) for every point of F_p^n in mixed-radix order.
template <typename Fn>
void for_each_point(PrimeModulus p, unsigned n, Fn&& fn) {
  const std::size_t count = table_size(p, n);
  for (std::size_t k = 0; k < count; ++k) fn(point_at(k, p, n));
}

inline std::vector<FieldElement> pt(std::initializer_list<std::uint32_t> values) {
  std::vector<FieldElement> x;
  for (auto v : values) x.push_back(FieldElement{v});
  return x;
}

}  // namespace minpoly::testing

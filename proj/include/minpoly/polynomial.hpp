#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minpoly/field.hpp"

namespace minpoly {

/// Default ceiling on dense table sizes p^n.
inline constexpr std::size_t kDefaultTableLimit = std::size_t{1} << 24;

/// Process-wide dense table ceiling; atomic, adjustable by the CLI.
std::size_t table_limit() noexcept;
void set_table_limit(std::size_t limit) noexcept;

/// p^n, or SizeLimitExceeded when it passes `limit`.
std::size_t table_size(PrimeModulus p, unsigned n, std::size_t limit);
inline std::size_t table_size(PrimeModulus p, unsigned n) {
  return table_size(p, n, table_limit());
}

using ExponentVector = std::vector<std::uint32_t>;

/// A monomial with unrestricted exponents, for building inputs that are not
/// yet reduced modulo x^p - x.
struct Term {
  ExponentVector exponents;
  std::int64_t coefficient = 1;
};

/// Element of F_p[x_0, ..., x_{n-1}] / (x_i^p - x_i), stored as a dense
/// table of p^n coefficients. Entry k holds the coefficient of the monomial
/// whose exponent vector is the base-p expansion of k, x_0 least significant.
/// Every value of this type is in canonical (minimal) form.
class Polynomial {
 public:
  /// Zero polynomial.
  Polynomial(PrimeModulus p, unsigned n);
  /// Takes ownership of a coefficient table; entries must be < p.
  Polynomial(PrimeModulus p, unsigned n, std::vector<std::uint32_t> coefficients);

  /// Sums the terms after reducing every exponent e >= p with x^p = x.
  static Polynomial from_terms(PrimeModulus p, unsigned n, std::span<const Term> terms);

  PrimeModulus modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_.value(); }
  unsigned arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return c_.size(); }

  std::span<const std::uint32_t> coefficients() const noexcept { return c_; }
  FieldElement coefficient(std::size_t index) const { return {c_.at(index)}; }
  FieldElement coefficient(std::span<const std::uint32_t> exponents) const;

  std::size_t index_of(std::span<const std::uint32_t> exponents) const;
  ExponentVector exponents_of(std::size_t index) const;

  bool is_zero() const noexcept;
  std::size_t term_count() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  PrimeModulus p_;
  unsigned n_;
  std::vector<std::uint32_t> c_;
};

Polynomial zero(PrimeModulus p, unsigned n);
Polynomial one(PrimeModulus p, unsigned n);
Polynomial constant(std::int64_t c, PrimeModulus p, unsigned n);
Polynomial variable(unsigned i, PrimeModulus p, unsigned n);

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial& operator+=(Polynomial& f, const Polynomial& g);
Polynomial& operator-=(Polynomial& f, const Polynomial& g);
Polynomial& operator*=(Polynomial& f, const Polynomial& g);

// Mixed forms with an integer constant, reduced mod p.
Polynomial operator+(const Polynomial& f, std::int64_t c);
Polynomial operator+(std::int64_t c, const Polynomial& f);
Polynomial operator-(const Polynomial& f, std::int64_t c);
Polynomial operator-(std::int64_t c, const Polynomial& f);
Polynomial operator*(std::int64_t c, const Polynomial& f);

Polynomial scale(FieldElement c, const Polynomial& f);
Polynomial pow(const Polynomial& f, std::uint64_t k);

/// Throws RingMismatch unless (p, n) agree.
bool equals(const Polynomial& f, const Polynomial& g);

/// Value at a point, Horner over one variable at a time.
FieldElement eval(const Polynomial& f, std::span<const FieldElement> point);

/// x -> f(subs_0(x), ..., subs_{n-1}(x)); all substituents share one ring.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> subs);

/// Same polynomial viewed in m >= n variables.
Polynomial extend_arity(const Polynomial& f, unsigned m);

/// e_i(x_0, ..., x_{n-1}), with e_0 = 1.
Polynomial elementary_symmetric(unsigned i, PrimeModulus p, unsigned n);

/// Per-variable maximum exponent over nonzero terms (all zero for f = 0).
std::vector<std::uint32_t> max_degree_per_variable(const Polynomial& f);
std::uint32_t total_degree(const Polynomial& f);
bool is_minimal_form(const Polynomial& f);

/// Graded-lex listing, x0 < x1 < ..., e.g. "x1 + x0*x1".
std::string to_string(const Polynomial& f);

}  // namespace minpoly

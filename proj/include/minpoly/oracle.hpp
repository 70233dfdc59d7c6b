#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "minpoly/field.hpp"
#include "minpoly/polynomial.hpp"

namespace minpoly {

// Reference semantics computed in plain integers over {0, ..., p-1}. These
// are the ground truth every polynomial construction is checked against.

FieldElement max_sem(std::span<const FieldElement> x);
FieldElement min_sem(std::span<const FieldElement> x);

/// Least index attaining the maximum (resp. minimum).
std::size_t argmax_sem(std::span<const FieldElement> x);
std::size_t argmin_sem(std::span<const FieldElement> x);
FieldElement argmax_digit_sem(std::span<const FieldElement> x, unsigned r, PrimeModulus p);
FieldElement argmin_digit_sem(std::span<const FieldElement> x, unsigned r, PrimeModulus p);

/// 1 iff max(x) == y.
FieldElement ismax_sem(FieldElement y, std::span<const FieldElement> x);

/// r-th base-p digit of the number of indices i with x_i == max(x).
FieldElement nummax_digit_sem(std::span<const FieldElement> x, unsigned r, PrimeModulus p);

/// 1 iff y0 + y1 >= p as integers.
FieldElement carry_sem(FieldElement y0, FieldElement y1, PrimeModulus p);

/// Two-bit ismax over F_2. `xbits` holds (x_{i,1}, x_{i,0}) pairs, high bit first.
FieldElement ismax_2bit_sem(FieldElement y1, FieldElement y0, std::span<const FieldElement> xbits,
                            PrimeModulus p);

enum class FunctionKind {
  max,
  min,
  argmax_digit,
  argmin_digit,
  ismax,
  nummax_digit,
  carry,
  ismax_2bit,
};

std::string_view to_string(FunctionKind kind) noexcept;
std::optional<FunctionKind> parse_function_kind(std::string_view name) noexcept;

/// A semantic function with its parameters. `n` counts the compared values;
/// ismax adds the leading y input, ismax_2bit takes 2(n+1) bits, carry is
/// always binary.
struct FunctionSpec {
  FunctionKind kind;
  PrimeModulus p;
  unsigned n = 1;
  unsigned r = 0;
};

unsigned input_arity(const FunctionSpec& spec);
FieldElement evaluate(const FunctionSpec& spec, std::span<const FieldElement> input);

/// Total map F_p^arity -> F_p, inputs in mixed-radix order with x_0 least
/// significant (the same order as Polynomial coefficients).
class TruthTable {
 public:
  TruthTable(PrimeModulus p, unsigned arity, std::vector<std::uint32_t> values);

  PrimeModulus modulus() const noexcept { return p_; }
  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::uint32_t> values() const noexcept { return values_; }
  FieldElement value(std::size_t index) const { return {values_.at(index)}; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  PrimeModulus p_;
  unsigned arity_;
  std::vector<std::uint32_t> values_;
};

using PointFunction = std::function<FieldElement(std::span<const FieldElement>)>;

TruthTable tabulate(PrimeModulus p, unsigned arity, const PointFunction& f);
TruthTable tabulate(const FunctionSpec& spec);
/// Values of a polynomial at every point, by direct evaluation.
TruthTable tabulate(const Polynomial& f);

/// The unique canonical polynomial agreeing with T everywhere. Applies the
/// p x p delta-basis matrix along each axis in turn, O(n p^(n+1)).
Polynomial interpolate(const TruthTable& table);

/// Decodes a mixed-radix index into a point.
std::vector<FieldElement> point_at(std::size_t index, PrimeModulus p, unsigned arity);

}  // namespace minpoly

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "minpoly/polynomial.hpp"

namespace minpoly {

enum class GateOp { input, constant, add, sub, mul, scale };

std::string_view to_string(GateOp op) noexcept;

/// One gate. Operand fields by op:
///   input    value = input index
///   constant value = field element
///   add/sub/mul  a, b = earlier gate indices
///   scale    value = field element, a = earlier gate index
struct Gate {
  GateOp op = GateOp::constant;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t value = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Arithmetic circuit over F_p in topological order with a single output.
class Circuit {
 public:
  /// Validates operand references, constants and input indices.
  Circuit(PrimeModulus p, unsigned inputs, std::vector<Gate> gates, std::uint32_t output);

  PrimeModulus modulus() const noexcept { return p_; }
  unsigned inputs() const noexcept { return inputs_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::uint32_t output() const noexcept { return output_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  PrimeModulus p_;
  unsigned inputs_;
  std::vector<Gate> gates_;
  std::uint32_t output_;
};

/// Appends gates without any sharing; common subexpressions are merged
/// afterwards by eliminate_common_subexpressions.
class CircuitBuilder {
 public:
  CircuitBuilder(PrimeModulus p, unsigned inputs) : p_(p), inputs_(inputs) {}

  std::uint32_t input(unsigned i);
  std::uint32_t constant(std::uint32_t c);
  std::uint32_t add(std::uint32_t a, std::uint32_t b);
  std::uint32_t sub(std::uint32_t a, std::uint32_t b);
  std::uint32_t mul(std::uint32_t a, std::uint32_t b);
  std::uint32_t scale(std::uint32_t c, std::uint32_t a);
  /// x^e (e >= 1) by repeated squaring, low bits multiplied in first.
  std::uint32_t power(std::uint32_t x, std::uint32_t e);

  Circuit build(std::uint32_t output) &&;

 private:
  std::uint32_t push(Gate g);

  PrimeModulus p_;
  unsigned inputs_;
  std::vector<Gate> gates_;
};

enum class LoweringStrategy {
  /// Sum of monomials, each a product of variable powers.
  naive_monomial,
  /// f = sum_e f_e(x_0..x_{k-1}) * x_k^e applied recursively from the last
  /// variable down, with the f_e lowered the same way.
  nested_horner,
};

std::string_view to_string(LoweringStrategy s) noexcept;

Circuit lower(const Polynomial& f, LoweringStrategy strategy);

/// Merges structurally identical gates (commutative operands normalized)
/// and drops gates the output does not depend on.
Circuit eliminate_common_subexpressions(const Circuit& c);

struct CostReport {
  std::uint64_t mul_count = 0;
  /// Add and Sub gates.
  std::uint64_t add_count = 0;
  std::uint64_t scale_count = 0;
  /// Longest input-to-output chain of Mul gates whose operands both depend
  /// on the inputs. Add, Sub and Scale are free.
  std::uint64_t mul_depth = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

CostReport cost(const Circuit& c);

FieldElement run(const Circuit& c, std::span<const FieldElement> point);

}  // namespace minpoly

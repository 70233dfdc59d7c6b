#include "minpoly/oracle.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace minpoly {

namespace {

void require_nonempty(std::span<const FieldElement> x, const char* fn) {
  if (x.empty()) throw DomainError(std::string(fn) + ": empty input");
}

constexpr std::array<std::pair<FunctionKind, std::string_view>, 8> kKindNames{{
    {FunctionKind::max, "max"},
    {FunctionKind::min, "min"},
    {FunctionKind::argmax_digit, "argmax_digit"},
    {FunctionKind::argmin_digit, "argmin_digit"},
    {FunctionKind::ismax, "ismax"},
    {FunctionKind::nummax_digit, "nummax_digit"},
    {FunctionKind::carry, "carry"},
    {FunctionKind::ismax_2bit, "ismax_2bit"},
}};

}  // namespace

FieldElement max_sem(std::span<const FieldElement> x) {
  require_nonempty(x, "max");
  return *std::max_element(x.begin(), x.end());
}

FieldElement min_sem(std::span<const FieldElement> x) {
  require_nonempty(x, "min");
  return *std::min_element(x.begin(), x.end());
}

std::size_t argmax_sem(std::span<const FieldElement> x) {
  require_nonempty(x, "argmax");
  // max_element returns the first of equal maxima.
  return static_cast<std::size_t>(std::max_element(x.begin(), x.end()) - x.begin());
}

std::size_t argmin_sem(std::span<const FieldElement> x) {
  require_nonempty(x, "argmin");
  return static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
}

FieldElement argmax_digit_sem(std::span<const FieldElement> x, unsigned r, PrimeModulus p) {
  return digit(argmax_sem(x), r, p);
}

FieldElement argmin_digit_sem(std::span<const FieldElement> x, unsigned r, PrimeModulus p) {
  return digit(argmin_sem(x), r, p);
}

FieldElement ismax_sem(FieldElement y, std::span<const FieldElement> x) {
  return {max_sem(x) == y ? 1u : 0u};
}

FieldElement nummax_digit_sem(std::span<const FieldElement> x, unsigned r, PrimeModulus p) {
  const auto top = max_sem(x);
  const auto count = static_cast<std::uint64_t>(std::count(x.begin(), x.end(), top));
  return digit(count, r, p);
}

FieldElement carry_sem(FieldElement y0, FieldElement y1, PrimeModulus p) {
  return {y0.value + y1.value >= p.value() ? 1u : 0u};
}

FieldElement ismax_2bit_sem(FieldElement y1, FieldElement y0, std::span<const FieldElement> xbits,
                            PrimeModulus p) {
  if (p.value() != 2) throw DomainError("ismax_2bit is defined over F_2 only");
  if (xbits.empty() || xbits.size() % 2 != 0) {
    throw DomainError("ismax_2bit: expected a nonempty list of bit pairs");
  }
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < xbits.size(); i += 2) {
    best = std::max(best, 2 * xbits[i].value + xbits[i + 1].value);
  }
  return {best == 2 * y1.value + y0.value ? 1u : 0u};
}

std::string_view to_string(FunctionKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<FunctionKind> parse_function_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

unsigned input_arity(const FunctionSpec& spec) {
  switch (spec.kind) {
    case FunctionKind::ismax:
      return spec.n + 1;
    case FunctionKind::ismax_2bit:
      return 2 * (spec.n + 1);
    case FunctionKind::carry:
      return 2;
    default:
      return spec.n;
  }
}

FieldElement evaluate(const FunctionSpec& spec, std::span<const FieldElement> input) {
  if (input.size() != input_arity(spec)) throw DomainError("evaluate: input arity mismatch");
  switch (spec.kind) {
    case FunctionKind::max:
      return max_sem(input);
    case FunctionKind::min:
      return min_sem(input);
    case FunctionKind::argmax_digit:
      return argmax_digit_sem(input, spec.r, spec.p);
    case FunctionKind::argmin_digit:
      return argmin_digit_sem(input, spec.r, spec.p);
    case FunctionKind::ismax:
      return ismax_sem(input[0], input.subspan(1));
    case FunctionKind::nummax_digit:
      return nummax_digit_sem(input, spec.r, spec.p);
    case FunctionKind::carry:
      return carry_sem(input[0], input[1], spec.p);
    case FunctionKind::ismax_2bit:
      return ismax_2bit_sem(input[0], input[1], input.subspan(2), spec.p);
  }
  throw DomainError("evaluate: unknown function kind");
}

TruthTable::TruthTable(PrimeModulus p, unsigned arity, std::vector<std::uint32_t> values)
    : p_(p), arity_(arity), values_(std::move(values)) {
  if (values_.size() != table_size(p, arity)) {
    throw DomainError("truth table has " + std::to_string(values_.size()) +
                      " entries, expected p^arity");
  }
  for (auto v : values_) {
    if (v >= p.value()) throw ModulusMismatch("truth table value not reduced mod p");
  }
}

std::vector<FieldElement> point_at(std::size_t index, PrimeModulus p, unsigned arity) {
  std::vector<FieldElement> x(arity);
  for (unsigned v = 0; v < arity; ++v) {
    x[v].value = static_cast<std::uint32_t>(index % p.value());
    index /= p.value();
  }
  return x;
}

TruthTable tabulate(PrimeModulus p, unsigned arity, const PointFunction& f) {
  const std::size_t size = table_size(p, arity);
  std::vector<std::uint32_t> values(size);
  std::vector<FieldElement> x(arity);
  for (std::size_t k = 0; k < size; ++k) {
    values[k] = f(x).value;
    // Odometer increment, x_0 fastest.
    for (unsigned v = 0; v < arity; ++v) {
      if (++x[v].value < p.value()) break;
      x[v].value = 0;
    }
  }
  return TruthTable(p, arity, std::move(values));
}

TruthTable tabulate(const FunctionSpec& spec) {
  return tabulate(spec.p, input_arity(spec),
                  [&](std::span<const FieldElement> x) { return evaluate(spec, x); });
}

TruthTable tabulate(const Polynomial& f) {
  return tabulate(f.modulus(), f.arity(),
                  [&](std::span<const FieldElement> x) { return eval(f, x); });
}

Polynomial interpolate(const TruthTable& table) {
  const std::uint32_t p = table.modulus().value();
  const unsigned n = table.arity();
  table_size(table.modulus(), 2);  // the p x p basis matrix is guarded too

  // basis[e * p + a] = coefficient of x^e in delta_a(x) = 1 - (x - a)^(p-1).
  std::vector<std::uint32_t> basis(static_cast<std::size_t>(p) * p, 0);
  for (std::uint32_t a = 0; a < p; ++a) {
    std::vector<std::uint32_t> power{1};  // (x - a)^k, low degree first
    for (std::uint32_t k = 0; k + 1 < p; ++k) {
      std::vector<std::uint32_t> next(power.size() + 1, 0);
      const std::uint32_t minus_a = detail::sub_mod(0, a, p);
      for (std::size_t i = 0; i < power.size(); ++i) {
        next[i + 1] = detail::add_mod(next[i + 1], power[i], p);
        next[i] = detail::add_mod(next[i], detail::mul_mod(power[i], minus_a, p), p);
      }
      power = std::move(next);
    }
    for (std::uint32_t e = 0; e < p; ++e) {
      const std::uint32_t c = detail::sub_mod(e == 0 ? 1 : 0, power[e], p);
      basis[static_cast<std::size_t>(e) * p + a] = c;
    }
  }

  std::vector<std::uint32_t> work(table.values().begin(), table.values().end());
  std::vector<std::uint32_t> line(p);
  std::size_t stride = 1;
  for (unsigned v = 0; v < n; ++v) {
    const std::size_t block = stride * p;
    for (std::size_t base = 0; base < work.size(); base += block) {
      for (std::size_t j = 0; j < stride; ++j) {
        for (std::uint32_t a = 0; a < p; ++a) line[a] = work[base + j + a * stride];
        for (std::uint32_t e = 0; e < p; ++e) {
          std::uint64_t acc = 0;
          const std::uint32_t* row = &basis[static_cast<std::size_t>(e) * p];
          for (std::uint32_t a = 0; a < p; ++a) {
            acc = (acc + static_cast<std::uint64_t>(row[a]) * line[a]) % p;
          }
          work[base + j + e * stride] = static_cast<std::uint32_t>(acc);
        }
      }
    }
    stride = block;
  }
  return Polynomial(table.modulus(), n, std::move(work));
}

}  // namespace minpoly

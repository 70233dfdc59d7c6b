#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minpoly/oracle.hpp"
#include "minpoly/polynomial.hpp"

namespace minpoly {

/// A catalog formula together with its parameters.
struct FormulaId {
  std::string name;
  std::uint32_t p = 2;
  unsigned n = 1;
  unsigned r = 0;
};

struct FormulaParams {
  std::uint32_t p;
  unsigned n;
  unsigned r;
};

struct CatalogEntry {
  std::string_view name;
  std::string_view summary;
  /// Human-readable parameter constraint, e.g. "p=3 only".
  std::string_view constraint;
  /// The identity the constructor implements.
  std::string_view identity;
  FunctionKind kind;
  std::optional<std::uint32_t> fixed_p;
  std::optional<unsigned> default_n;
  bool uses_r;
  /// Throws DomainError when (p, n, r) violates the formula's constraints.
  void (*validate)(std::uint32_t p, unsigned n, unsigned r);
  Polynomial (*build)(PrimeModulus p, unsigned n, unsigned r);
  /// Parameter sets checked by `verify --all`.
  std::vector<FormulaParams> default_cases;
};

/// Every formula, in a fixed order.
std::span<const CatalogEntry> catalog();

/// Throws DomainError for unknown names.
const CatalogEntry& find_formula(std::string_view name);

/// Fills in fixed/default parameters and validates; throws DomainError.
FormulaId resolve(const CatalogEntry& entry, std::optional<std::uint32_t> p,
                  std::optional<unsigned> n, std::optional<unsigned> r);

void validate(const FormulaId& id);
Polynomial build_formula(const FormulaId& id);
/// The semantic function a formula claims to compute.
FunctionSpec function_spec(const FormulaId& id);

}  // namespace minpoly

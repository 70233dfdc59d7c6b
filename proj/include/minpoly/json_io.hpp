#pragma once

#include <string>

#include <json.hpp>

#include "minpoly/circuit.hpp"
#include "minpoly/oracle.hpp"
#include "minpoly/polynomial.hpp"

namespace minpoly {

// Schemas:
//   Polynomial  {"p":P, "n":N, "coeffs":[...]}           p^n entries, x_0 least significant
//   TruthTable  {"p":P, "arity":N, "values":[...]}        same ordering
//   Circuit     {"p":P, "inputs":N, "gates":[{"op":..., "args":[...]}], "output":K}
//   CostReport  {"mul_count", "add_count", "scale_count", "mul_depth"}
// Parsers throw FormatError on schema violations.

nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TruthTable& t);
TruthTable truth_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CostReport& r);

/// Compact single-line serialization with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace minpoly

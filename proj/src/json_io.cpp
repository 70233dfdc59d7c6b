#include "minpoly/json_io.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

namespace minpoly {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::uint64_t unsigned_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw FormatError(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<std::uint32_t> unsigned_array(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 ||
        x.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
      throw FormatError(std::string("field '") + key + "' must hold nonnegative integers");
    }
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

PrimeModulus modulus_field(const json& j) {
  const auto p = unsigned_field(j, "p");
  if (p > PrimeModulus::kMax) throw FormatError("p out of range");
  try {
    return PrimeModulus(static_cast<std::uint32_t>(p));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

constexpr std::array<GateOp, 6> kOps{GateOp::input, GateOp::constant, GateOp::add,
                                     GateOp::sub,   GateOp::mul,      GateOp::scale};

}  // namespace

json to_json(const Polynomial& f) {
  json j = json::object();
  j["p"] = f.characteristic();
  j["n"] = f.arity();
  j["coeffs"] = std::vector<std::uint32_t>(f.coefficients().begin(), f.coefficients().end());
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  const auto p = modulus_field(j);
  const auto n = static_cast<unsigned>(unsigned_field(j, "n"));
  auto coeffs = unsigned_array(j, "coeffs");
  try {
    return Polynomial(p, n, std::move(coeffs));
  } catch (const SizeLimitExceeded&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid polynomial: ") + e.what());
  }
}

json to_json(const TruthTable& t) {
  json j = json::object();
  j["p"] = t.modulus().value();
  j["arity"] = t.arity();
  j["values"] = std::vector<std::uint32_t>(t.values().begin(), t.values().end());
  return j;
}

TruthTable truth_table_from_json(const json& j) {
  const auto p = modulus_field(j);
  const auto arity = static_cast<unsigned>(unsigned_field(j, "arity"));
  auto values = unsigned_array(j, "values");
  try {
    return TruthTable(p, arity, std::move(values));
  } catch (const SizeLimitExceeded&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid truth table: ") + e.what());
  }
}

json to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates()) {
    json args;
    switch (g.op) {
      case GateOp::input:
      case GateOp::constant:
        args = json::array({g.value});
        break;
      case GateOp::add:
      case GateOp::sub:
      case GateOp::mul:
        args = json::array({g.a, g.b});
        break;
      case GateOp::scale:
        args = json::array({g.value, g.a});
        break;
    }
    json gate = json::object();
    gate["op"] = std::string(to_string(g.op));
    gate["args"] = std::move(args);
    gates.push_back(std::move(gate));
  }
  json j = json::object();
  j["p"] = c.modulus().value();
  j["inputs"] = c.inputs();
  j["gates"] = std::move(gates);
  j["output"] = c.output();
  return j;
}

Circuit circuit_from_json(const json& j) {
  const auto p = modulus_field(j);
  const auto inputs = static_cast<unsigned>(unsigned_field(j, "inputs"));
  const auto output = static_cast<std::uint32_t>(unsigned_field(j, "output"));
  const auto& list = field(j, "gates");
  if (!list.is_array()) throw FormatError("field 'gates' must be an array");
  std::vector<Gate> gates;
  for (const auto& entry : list) {
    if (!entry.is_object() || !field(entry, "op").is_string()) {
      throw FormatError("gate must be an object with a string 'op'");
    }
    const auto name = entry.at("op").get<std::string>();
    const auto* op = std::find_if(kOps.begin(), kOps.end(),
                                  [&](GateOp o) { return to_string(o) == name; });
    if (op == kOps.end()) throw FormatError("unknown gate op '" + name + "'");
    const auto args = unsigned_array(entry, "args");
    const std::size_t expected =
        (*op == GateOp::input || *op == GateOp::constant) ? 1 : 2;
    if (args.size() != expected) throw FormatError("gate '" + name + "' has wrong arity");
    Gate g{*op, 0, 0, 0};
    switch (*op) {
      case GateOp::input:
      case GateOp::constant:
        g.value = args[0];
        break;
      case GateOp::scale:
        g.value = args[0];
        g.a = args[1];
        break;
      default:
        g.a = args[0];
        g.b = args[1];
        break;
    }
    gates.push_back(g);
  }
  try {
    return Circuit(p, inputs, std::move(gates), output);
  } catch (const Error& e) {
    throw FormatError(std::string("invalid circuit: ") + e.what());
  }
}

json to_json(const CostReport& r) {
  json j = json::object();
  j["mul_count"] = r.mul_count;
  j["add_count"] = r.add_count;
  j["scale_count"] = r.scale_count;
  j["mul_depth"] = r.mul_depth;
  return j;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace minpoly

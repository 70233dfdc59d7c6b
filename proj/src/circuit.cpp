#include "minpoly/circuit.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace minpoly {

std::string_view to_string(GateOp op) noexcept {
  switch (op) {
    case GateOp::input:
      return "input";
    case GateOp::constant:
      return "const";
    case GateOp::add:
      return "add";
    case GateOp::sub:
      return "sub";
    case GateOp::mul:
      return "mul";
    case GateOp::scale:
      return "scale";
  }
  return "?";
}

std::string_view to_string(LoweringStrategy s) noexcept {
  return s == LoweringStrategy::naive_monomial ? "naive_monomial" : "nested_horner";
}

Circuit::Circuit(PrimeModulus p, unsigned inputs, std::vector<Gate> gates, std::uint32_t output)
    : p_(p), inputs_(inputs), gates_(std::move(gates)), output_(output) {
  if (gates_.empty()) throw DomainError("circuit has no gates");
  if (output_ >= gates_.size()) throw DomainError("circuit output refers to a missing gate");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    auto earlier = [&](std::uint32_t ref) {
      if (ref >= i) {
        throw DomainError("gate " + std::to_string(i) + " refers to gate " + std::to_string(ref) +
                          " which is not earlier");
      }
    };
    switch (g.op) {
      case GateOp::input:
        if (g.value >= inputs_) throw DomainError("input gate index out of range");
        break;
      case GateOp::constant:
        if (g.value >= p_.value()) throw ModulusMismatch("constant not reduced mod p");
        break;
      case GateOp::add:
      case GateOp::sub:
      case GateOp::mul:
        earlier(g.a);
        earlier(g.b);
        break;
      case GateOp::scale:
        if (g.value >= p_.value()) throw ModulusMismatch("scale factor not reduced mod p");
        earlier(g.a);
        break;
    }
  }
}

std::uint32_t CircuitBuilder::push(Gate g) {
  gates_.push_back(g);
  return static_cast<std::uint32_t>(gates_.size() - 1);
}

std::uint32_t CircuitBuilder::input(unsigned i) { return push({GateOp::input, 0, 0, i}); }
std::uint32_t CircuitBuilder::constant(std::uint32_t c) { return push({GateOp::constant, 0, 0, c}); }
std::uint32_t CircuitBuilder::add(std::uint32_t a, std::uint32_t b) { return push({GateOp::add, a, b, 0}); }
std::uint32_t CircuitBuilder::sub(std::uint32_t a, std::uint32_t b) { return push({GateOp::sub, a, b, 0}); }
std::uint32_t CircuitBuilder::mul(std::uint32_t a, std::uint32_t b) { return push({GateOp::mul, a, b, 0}); }
std::uint32_t CircuitBuilder::scale(std::uint32_t c, std::uint32_t a) { return push({GateOp::scale, a, 0, c}); }

std::uint32_t CircuitBuilder::power(std::uint32_t x, std::uint32_t e) {
  if (e == 0) throw DomainError("power: exponent must be positive");
  std::uint32_t square = x;
  std::optional<std::uint32_t> acc;
  for (;;) {
    if (e & 1u) acc = acc ? mul(*acc, square) : square;
    e >>= 1;
    if (e == 0) break;
    square = mul(square, square);
  }
  return *acc;
}

Circuit CircuitBuilder::build(std::uint32_t output) && {
  return Circuit(p_, inputs_, std::move(gates_), output);
}

namespace {

// A lowered subexpression; constants stay symbolic until an operand needs them.
struct Wire {
  bool is_constant;
  std::uint32_t value;  // constant value, or gate index otherwise
};

Circuit lower_naive(const Polynomial& f) {
  CircuitBuilder b(f.modulus(), f.arity());
  const auto c = f.coefficients();
  std::optional<std::uint32_t> sum;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const auto e = f.exponents_of(k);
    std::optional<std::uint32_t> product;
    for (unsigned v = 0; v < f.arity(); ++v) {
      if (e[v] == 0) continue;
      const auto pw = b.power(b.input(v), e[v]);
      product = product ? b.mul(*product, pw) : pw;
    }
    std::uint32_t term;
    if (!product) {
      term = b.constant(c[k]);
    } else {
      term = c[k] == 1 ? *product : b.scale(c[k], *product);
    }
    sum = sum ? b.add(*sum, term) : term;
  }
  if (!sum) sum = b.constant(0);
  return std::move(b).build(*sum);
}

class NestedLowering {
 public:
  explicit NestedLowering(const Polynomial& f)
      : f_(f), b_(f.modulus(), f.arity()), stride_(f.arity()) {
    std::size_t s = 1;
    for (unsigned v = 0; v < f.arity(); ++v) {
      stride_[v] = s;
      s *= f.characteristic();
    }
  }

  Circuit run() && {
    auto w = lower(static_cast<int>(f_.arity()) - 1, 0);
    const std::uint32_t out = w ? gate_of(*w) : b_.constant(0);
    return std::move(b_).build(out);
  }

 private:
  std::uint32_t gate_of(const Wire& w) { return w.is_constant ? b_.constant(w.value) : w.value; }

  std::optional<Wire> lower(int v, std::size_t offset) {
    const auto c = f_.coefficients();
    if (v < 0) {
      if (c[offset] == 0) return std::nullopt;
      return Wire{true, c[offset]};
    }
    std::optional<Wire> sum;
    for (std::uint32_t e = 0; e < f_.characteristic(); ++e) {
      auto part = lower(v - 1, offset + e * stride_[static_cast<unsigned>(v)]);
      if (!part) continue;
      Wire term = *part;
      if (e > 0) {
        const auto pw = b_.power(b_.input(static_cast<unsigned>(v)), e);
        if (!part->is_constant) {
          term = Wire{false, b_.mul(part->value, pw)};
        } else if (part->value == 1) {
          term = Wire{false, pw};
        } else {
          term = Wire{false, b_.scale(part->value, pw)};
        }
      }
      sum = sum ? Wire{false, b_.add(gate_of(*sum), gate_of(term))} : term;
    }
    return sum;
  }

  const Polynomial& f_;
  CircuitBuilder b_;
  std::vector<std::size_t> stride_;
};

std::vector<bool> reachable(const Circuit& c) {
  const auto g = c.gates();
  std::vector<bool> live(g.size(), false);
  live[c.output()] = true;
  for (std::size_t i = g.size(); i-- > 0;) {
    if (!live[i]) continue;
    switch (g[i].op) {
      case GateOp::add:
      case GateOp::sub:
      case GateOp::mul:
        live[g[i].a] = true;
        live[g[i].b] = true;
        break;
      case GateOp::scale:
        live[g[i].a] = true;
        break;
      default:
        break;
    }
  }
  return live;
}

}  // namespace

Circuit lower(const Polynomial& f, LoweringStrategy strategy) {
  if (strategy == LoweringStrategy::naive_monomial) return lower_naive(f);
  return NestedLowering(f).run();
}

Circuit eliminate_common_subexpressions(const Circuit& c) {
  const auto g = c.gates();
  const auto live = reachable(c);
  std::vector<std::uint32_t> remap(g.size(), 0);
  std::vector<Gate> out;
  std::map<std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t>, std::uint32_t> seen;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!live[i]) continue;
    Gate ng = g[i];
    switch (ng.op) {
      case GateOp::add:
      case GateOp::mul:
        ng.a = remap[ng.a];
        ng.b = remap[ng.b];
        if (ng.a > ng.b) std::swap(ng.a, ng.b);
        break;
      case GateOp::sub:
        ng.a = remap[ng.a];
        ng.b = remap[ng.b];
        break;
      case GateOp::scale:
        ng.a = remap[ng.a];
        break;
      default:
        break;
    }
    const auto key = std::make_tuple(static_cast<int>(ng.op), ng.a, ng.b, ng.value);
    auto [it, inserted] = seen.emplace(key, static_cast<std::uint32_t>(out.size()));
    if (inserted) out.push_back(ng);
    remap[i] = it->second;
  }
  return Circuit(c.modulus(), c.inputs(), std::move(out), remap[c.output()]);
}

CostReport cost(const Circuit& c) {
  const auto g = c.gates();
  CostReport report;
  std::vector<std::uint64_t> depth(g.size(), 0);
  std::vector<bool> varies(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Gate& x = g[i];
    switch (x.op) {
      case GateOp::input:
        varies[i] = true;
        break;
      case GateOp::constant:
        break;
      case GateOp::add:
      case GateOp::sub:
        ++report.add_count;
        depth[i] = std::max(depth[x.a], depth[x.b]);
        varies[i] = varies[x.a] || varies[x.b];
        break;
      case GateOp::scale:
        ++report.scale_count;
        depth[i] = depth[x.a];
        varies[i] = varies[x.a];
        break;
      case GateOp::mul:
        ++report.mul_count;
        depth[i] = std::max(depth[x.a], depth[x.b]) + (varies[x.a] && varies[x.b] ? 1 : 0);
        varies[i] = varies[x.a] || varies[x.b];
        break;
    }
  }
  report.mul_depth = depth[c.output()];
  return report;
}

FieldElement run(const Circuit& c, std::span<const FieldElement> point) {
  if (point.size() != c.inputs()) {
    throw DomainError("circuit expects " + std::to_string(c.inputs()) + " inputs, got " +
                      std::to_string(point.size()));
  }
  const std::uint32_t p = c.modulus().value();
  for (auto a : point) {
    if (a.value >= p) throw ModulusMismatch("input not reduced mod p");
  }
  const auto g = c.gates();
  std::vector<std::uint32_t> val(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Gate& x = g[i];
    switch (x.op) {
      case GateOp::input:
        val[i] = point[x.value].value;
        break;
      case GateOp::constant:
        val[i] = x.value;
        break;
      case GateOp::add:
        val[i] = detail::add_mod(val[x.a], val[x.b], p);
        break;
      case GateOp::sub:
        val[i] = detail::sub_mod(val[x.a], val[x.b], p);
        break;
      case GateOp::mul:
        val[i] = detail::mul_mod(val[x.a], val[x.b], p);
        break;
      case GateOp::scale:
        val[i] = detail::mul_mod(x.value, val[x.a], p);
        break;
    }
  }
  return {val[c.output()]};
}

}  // namespace minpoly

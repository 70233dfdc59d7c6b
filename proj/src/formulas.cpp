#include "minpoly/formulas.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace minpoly {

namespace {

const PrimeModulus kTwo{2};
const PrimeModulus kThree{3};
const PrimeModulus kFive{5};

void require_inputs(unsigned n, const char* fn) {
  if (n == 0) throw DomainError(std::string(fn) + " requires at least one input");
}

std::vector<Polynomial> variables(PrimeModulus p, unsigned n) {
  std::vector<Polynomial> xs;
  xs.reserve(n);
  for (unsigned i = 0; i < n; ++i) xs.push_back(variable(i, p, n));
  return xs;
}

Polynomial product_of(const std::vector<Polynomial>& factors, PrimeModulus p, unsigned n) {
  Polynomial acc = one(p, n);
  for (const auto& f : factors) acc *= f;
  return acc;
}

/// Same univariate polynomial placed at each of the n variables.
std::vector<Polynomial> at_each_variable(const Polynomial& univariate, unsigned n) {
  std::vector<Polynomial> out;
  out.reserve(n);
  for (unsigned i = 0; i < n; ++i) out.push_back(in_variable(univariate, i, n));
  return out;
}

/// table[t][i] = L_t(x_i), t = 0..p.
std::vector<std::vector<Polynomial>> lowpass_table(PrimeModulus p, unsigned n) {
  std::vector<std::vector<Polynomial>> table;
  for (std::uint32_t t = 0; t <= p.value(); ++t) table.push_back(at_each_variable(lowpass(t, p), n));
  return table;
}

std::vector<std::vector<Polynomial>> delta_table(PrimeModulus p, unsigned n) {
  std::vector<std::vector<Polynomial>> table;
  for (std::uint32_t t = 0; t < p.value(); ++t) table.push_back(at_each_variable(delta(t, p), n));
  return table;
}

/// prefix[i] = f_0 * ... * f_{i-1}.
std::vector<Polynomial> prefix_products(const std::vector<Polynomial>& f, PrimeModulus p, unsigned n) {
  std::vector<Polynomial> out{one(p, n)};
  for (const auto& g : f) out.push_back(out.back() * g);
  return out;
}

/// suffix[i] = f_{i+1} * ... * f_{m-1}; suffix has m entries.
std::vector<Polynomial> suffix_products(const std::vector<Polynomial>& f, PrimeModulus p, unsigned n) {
  std::vector<Polynomial> out(f.size(), one(p, n));
  for (std::size_t i = f.size(); i-- > 1;) out[i - 1] = out[i] * f[i];
  return out;
}

/// y (y-1) ... (y-k+1).
Polynomial falling(const Polynomial& y, std::uint32_t k) {
  Polynomial acc = one(y.modulus(), y.arity());
  for (std::uint32_t j = 0; j < k; ++j) acc *= y - static_cast<std::int64_t>(j);
  return acc;
}

/// (y+1)(y+2)...(y+k).
Polynomial rising_from_one(const Polynomial& y, std::uint32_t k) {
  Polynomial acc = one(y.modulus(), y.arity());
  for (std::uint32_t j = 1; j <= k; ++j) acc *= y + static_cast<std::int64_t>(j);
  return acc;
}

/// d^{-1} (x_0+1)...(x_0+d) x_1 (x_1-1)...(x_1-(p-d)+1)
Polynomial two_input_term(PrimeModulus p, std::uint32_t d, const Polynomial& x0,
                          const Polynomial& x1) {
  const PrimeField field(p);
  const auto inv = field.inverse(FieldElement{d});
  return scale(inv, rising_from_one(x0, d) * falling(x1, p.value() - d));
}

}  // namespace

Polynomial delta(std::uint32_t t, PrimeModulus p) {
  if (t >= p.value()) throw DomainError("delta: t must lie in F_p");
  const Polynomial x = variable(0, p, 1);
  return 1 - pow(x - static_cast<std::int64_t>(t), p.value() - 1);
}

Polynomial lowpass(std::uint32_t t, PrimeModulus p) {
  if (t > p.value()) throw DomainError("lowpass: t must lie in {0, ..., p}");
  Polynomial acc = zero(p, 1);
  for (std::uint32_t k = 0; k < t; ++k) acc += delta(k, p);
  return acc;
}

Polynomial in_variable(const Polynomial& univariate, unsigned i, unsigned n) {
  if (univariate.arity() != 1) throw DomainError("in_variable expects a univariate polynomial");
  const std::vector<Polynomial> subs{variable(i, univariate.modulus(), n)};
  return compose(univariate, subs);
}

Polynomial reflect_inputs(const Polynomial& f) {
  const PrimeModulus p = f.modulus();
  const std::int64_t top = p.value() - 1;
  std::vector<Polynomial> subs;
  for (unsigned i = 0; i < f.arity(); ++i) subs.push_back(top - variable(i, p, f.arity()));
  return compose(f, subs);
}

Polynomial involution_conjugate(const Polynomial& f) {
  return static_cast<std::int64_t>(f.characteristic() - 1) - reflect_inputs(f);
}

Polynomial max_general(PrimeModulus p, unsigned n) {
  require_inputs(n, "max_general");
  Polynomial acc = zero(p, n);
  for (std::uint32_t t = 1; t < p.value(); ++t) {
    acc += 1 - product_of(at_each_variable(lowpass(t, p), n), p, n);
  }
  return acc;
}

Polynomial min_general(PrimeModulus p, unsigned n) {
  return involution_conjugate(max_general(p, n));
}

Polynomial max_p2(unsigned n) {
  require_inputs(n, "max_p2");
  Polynomial acc = one(kTwo, n);
  for (const auto& x : variables(kTwo, n)) acc *= 1 + x;
  return acc - 1;
}

Polynomial min_p2(unsigned n) {
  require_inputs(n, "min_p2");
  return elementary_symmetric(n, kTwo, n);
}

Polynomial max_p3(unsigned n) {
  require_inputs(n, "max_p3");
  Polynomial even = zero(kThree, n);
  Polynomial all = zero(kThree, n);
  for (unsigned i = 0; i <= n; ++i) {
    const auto e = elementary_symmetric(i, kThree, n);
    all += e;
    if (i % 2 == 0) even += e;
  }
  return even * all - 1;
}

Polynomial min_p3(unsigned n) {
  require_inputs(n, "min_p3");
  const auto en = elementary_symmetric(n, kThree, n);
  Polynomial inner = 1 + en;
  for (unsigned i = 1; i <= n; ++i) {
    const std::int64_t sign = i % 2 == 0 ? 1 : -1;
    inner += sign * elementary_symmetric(i, kThree, n);
  }
  return en * inner;
}

Polynomial max_p5_n2() {
  const auto e1 = elementary_symmetric(1, kFive, 2);
  const auto e2 = elementary_symmetric(2, kFive, 2);
  const Polynomial left = 1 + e1 + e2;
  const Polynomial right = 1 + 2 * (e1 * e1 * e2) + 4 * (e1 * e2) + e2;
  return left * right - 1;
}

Polynomial max_p5_n3() {
  const auto e1 = elementary_symmetric(1, kFive, 3);
  const auto e2 = elementary_symmetric(2, kFive, 3);
  const auto e3 = elementary_symmetric(3, kFive, 3);
  const Polynomial left = 1 + e1 + e2 + e3;
  const Polynomial right = 1 + 2 * (e1 * e1 * e2) + e1 * e2 * e3 + 2 * (e1 * e3 * e3) +
                           e2 * e2 * e3 + 2 * (e2 * e3 * e3) + 4 * (e1 * e2) + 3 * (e1 * e3) +
                           e2 * e3 + 3 * (e3 * e3) + e2;
  return left * right - 1;
}

Polynomial max_n2(PrimeModulus p) {
  if (p.value() < 3) throw DomainError("max_n2 requires p >= 3; use max_p2 for p=2");
  const auto x0 = variable(0, p, 2);
  const auto x1 = variable(1, p, 2);
  Polynomial sum = zero(p, 2);
  for (std::uint32_t d = 2; d + 2 <= p.value(); ++d) sum += two_input_term(p, d, x0, x1);
  const std::uint64_t top = p.value() - 1;
  return (x1 - x0) * sum + x0 + pow(x0 + 1, 2) * (1 - pow(x1 + 1, top)) +
         (1 - pow(x0, top)) * pow(x1, 2);
}

Polynomial argmax_digit_general(PrimeModulus p, unsigned n, unsigned r) {
  require_inputs(n, "argmax_digit_general");
  Polynomial acc = zero(p, n);
  bool any_digit = false;
  for (unsigned i = 0; i < n; ++i) any_digit |= digit(i, r, p).value != 0;
  if (!any_digit) return acc;

  const auto L = lowpass_table(p, n);
  const auto D = delta_table(p, n);
  for (std::uint32_t t = 0; t < p.value(); ++t) {
    const auto before = prefix_products(L[t], p, n);
    const auto after = suffix_products(L[t + 1], p, n);
    for (unsigned i = 0; i < n; ++i) {
      const auto w = digit(i, r, p);
      if (w.value == 0) continue;
      acc += scale(w, before[i] * D[t][i] * after[i]);
    }
  }
  return acc;
}

Polynomial argmin_digit_general(PrimeModulus p, unsigned n, unsigned r) {
  return reflect_inputs(argmax_digit_general(p, n, r));
}

Polynomial argmax_block_recurrence(PrimeModulus p, unsigned n, unsigned r,
                                   const ArityBuilder& argmax0_builder,
                                   const ArityBuilder& max_builder) {
  require_inputs(n, "argmax_block_recurrence");
  std::size_t block = 1;
  for (unsigned i = 0; i < r; ++i) block *= p.value();
  const auto blocks = static_cast<unsigned>((n + block - 1) / block);

  std::vector<Polynomial> maxima;
  if (block == 1) {
    maxima = variables(p, n);
  } else {
    const Polynomial block_max = max_builder(p, static_cast<unsigned>(block));
    for (unsigned b = 0; b < blocks; ++b) {
      std::vector<Polynomial> subs;
      for (std::size_t j = 0; j < block; ++j) {
        const std::size_t i = b * block + j;
        subs.push_back(i < n ? variable(static_cast<unsigned>(i), p, n) : zero(p, n));
      }
      maxima.push_back(compose(block_max, subs));
    }
  }
  return compose(argmax0_builder(p, blocks), maxima);
}

Polynomial argmax_extend_recursive(PrimeModulus p, unsigned r, const Polynomial& prefix,
                                   unsigned n, const Polynomial& argmax0_2var,
                                   const Polynomial& max_prefix) {
  if (prefix.modulus() != p || max_prefix.modulus() != p || argmax0_2var.modulus() != p) {
    throw RingMismatch("argmax_extend_recursive: polynomials over different fields");
  }
  if (prefix.arity() != n || max_prefix.arity() != n || argmax0_2var.arity() != 2) {
    throw RingMismatch("argmax_extend_recursive: arity mismatch");
  }
  const Polynomial m = extend_arity(max_prefix, n + 1);
  const std::vector<Polynomial> subs{m, variable(n, p, n + 1)};
  const Polynomial a = compose(argmax0_2var, subs);
  const auto w = digit(n, r, p);
  return extend_arity(prefix, n + 1) * (1 - a) + scale(w, a);
}

Polynomial argmax_by_extension(PrimeModulus p, unsigned n, unsigned r,
                               const Polynomial& argmax0_2var, const ArityBuilder& max_builder) {
  require_inputs(n, "argmax_by_extension");
  Polynomial current = zero(p, 1);
  for (unsigned k = 1; k < n; ++k) {
    current = argmax_extend_recursive(p, r, current, k, argmax0_2var, max_builder(p, k));
  }
  return current;
}

Polynomial argmax_p2(unsigned n, unsigned r) {
  require_inputs(n, "argmax_p2");
  const std::size_t block = std::size_t{1} << r;
  // Pad to (2k+2) blocks of 2^r; padded variables are zero so their (1+x) is 1.
  std::size_t blocks = (n + block - 1) / block;
  if (blocks % 2 == 1) ++blocks;
  const auto xs = variables(kTwo, n);
  Polynomial acc = zero(kTwo, n);
  Polynomial running = one(kTwo, n);
  std::size_t consumed = 0;
  for (std::size_t i = 1; i <= blocks; ++i) {
    const std::size_t upto = std::min<std::size_t>(i * block, n);
    for (; consumed < upto; ++consumed) running *= 1 + xs[consumed];
    acc += running;
  }
  return acc;
}

std::vector<unsigned> argmax_p2_selector_set(unsigned n, unsigned r) {
  const long long low = 1LL << r;
  const long long step = 1LL << (r + 1);
  const long long nn = n;
  std::vector<unsigned> s;
  if (nn < low) return s;  // every index < 2^r, digit r is always 0
  auto insert = [&](long long v) {
    if (v < 0) return;
    const auto u = static_cast<unsigned>(v);
    if (std::find(s.begin(), s.end(), u) == s.end()) s.push_back(u);
  };
  // k < (n + 1 - 2^r) / 2^(r+1)  <=>  k * 2^(r+1) < n + 1 - 2^r
  for (long long k = 0; k * step < nn + 1 - low; ++k) insert(step * k + low - 1);
  for (long long k = 1; k * step < nn + 1 - low; ++k) insert(step * k - 1);
  insert(std::min(nn, step * ((nn - low) / step + 1) - 1));
  std::sort(s.begin(), s.end());
  return s;
}

Polynomial argmax_p2_selector(unsigned n, unsigned r) {
  const unsigned arity = n + 1;
  const auto xs = variables(kTwo, arity);
  const auto prefix = prefix_products(
      [&] {
        std::vector<Polynomial> f;
        for (const auto& x : xs) f.push_back(1 + x);
        return f;
      }(),
      kTwo, arity);
  Polynomial acc = zero(kTwo, arity);
  for (unsigned i : argmax_p2_selector_set(n, r)) acc += prefix[i + 1];
  return acc;
}

Polynomial argmax_p3_n3() {
  const auto x = variables(kThree, 3);
  const auto& x0 = x[0];
  const auto& x1 = x[1];
  const auto& x2 = x[2];
  const Polynomial inner = x0 * x1 * x1 * x2 + x1 * x1 * x2 * x2 + x1 * x1 * x2 +
                           2 * (x1 * x2 * x2) + x0 * x1 + 2 * (x0 * x2) + 2 * (x1 * x1) +
                           x1 * x2 + x2 * x2;
  return 2 * (inner * (x0 + 1));
}

Polynomial carry_phi1(PrimeModulus p) {
  const PrimeField field(p);
  const auto y0 = variable(0, p, 2);
  const auto y1 = variable(1, p, 2);
  Polynomial acc = zero(p, 2);
  for (std::uint32_t d = 1; d < p.value(); ++d) {
    auto c = field.inverse(FieldElement{d});
    if (d % 2 == 1) c = field.neg(c);
    acc += scale(c, falling(y0, d) * falling(y1, p.value() - d));
  }
  return acc;
}

Polynomial argmax0_n2(PrimeModulus p) {
  const auto x0 = variable(0, p, 2);
  const auto x1 = variable(1, p, 2);
  Polynomial acc = zero(p, 2);
  for (std::uint32_t d = 1; d < p.value(); ++d) acc += two_input_term(p, d, x0, x1);
  return acc;
}

Polynomial ismax_general(PrimeModulus p, unsigned n) {
  require_inputs(n, "ismax_general");
  const unsigned arity = n + 1;
  // Lift the x-only tables into the ring with y at variable 0.
  std::vector<Polynomial> shift;
  for (unsigned i = 0; i < n; ++i) shift.push_back(variable(i + 1, p, arity));
  auto lift = [&](const Polynomial& f) { return compose(f, shift); };

  Polynomial acc = zero(p, arity);
  const auto L = lowpass_table(p, n);
  const auto D = delta_table(p, n);
  for (std::uint32_t t = 0; t < p.value(); ++t) {
    const auto before = prefix_products(L[t], p, n);
    const auto after = suffix_products(L[t + 1], p, n);
    Polynomial inner = zero(p, n);
    for (unsigned i = 0; i < n; ++i) inner += before[i] * D[t][i] * after[i];
    acc += in_variable(delta(t, p), 0, arity) * lift(inner);
  }
  return acc;
}

Polynomial nummax0_general(PrimeModulus p, unsigned n) {
  require_inputs(n, "nummax0_general");
  Polynomial acc = zero(p, n);
  const auto L = lowpass_table(p, n);
  const auto D = delta_table(p, n);
  for (std::uint32_t t = 0; t < p.value(); ++t) {
    const auto before = prefix_products(L[t + 1], p, n);
    const auto after = suffix_products(L[t + 1], p, n);
    for (unsigned i = 0; i < n; ++i) acc += D[t][i] * before[i] * after[i];
  }
  return acc;
}

Polynomial nummax_digit_subsets(PrimeModulus p, unsigned n, unsigned r) {
  require_inputs(n, "nummax_digit_subsets");
  if (n >= 31) throw SizeLimitExceeded("nummax_digit_subsets: too many subsets");
  Polynomial acc = zero(p, n);
  const auto L = lowpass_table(p, n);
  const auto D = delta_table(p, n);
  // I ranges over all k-element subsets of {0, ..., n-1}, for every k >= 1.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto k = static_cast<unsigned>(std::popcount(mask));
    const auto w = digit(k, r, p);
    if (w.value == 0) continue;
    Polynomial inner = zero(p, n);
    for (std::uint32_t t = 0; t < p.value(); ++t) {
      Polynomial term = one(p, n);
      for (unsigned i = 0; i < n; ++i) term *= (mask >> i & 1u) ? D[t][i] : L[t][i];
      inner += term;
    }
    acc += scale(w, inner);
  }
  return acc;
}

Polynomial ismax_p2(unsigned n) {
  require_inputs(n, "ismax_p2");
  const auto v = variables(kTwo, n + 1);
  Polynomial prod = one(kTwo, n + 1);
  for (unsigned i = 1; i <= n; ++i) prod *= 1 + v[i];
  return v[0] + prod;
}

Polynomial ismax_p3(unsigned n) {
  require_inputs(n, "ismax_p3");
  const auto v = variables(kThree, n + 1);
  const auto& y = v[0];
  Polynomial plus = one(kThree, n + 1);
  Polynomial zeros = one(kThree, n + 1);
  for (unsigned i = 1; i <= n; ++i) {
    plus *= 1 + v[i];
    zeros *= 1 - v[i] * v[i];
  }
  return -(y * y) + y * (plus * plus + zeros + 1) + zeros;
}

Polynomial nummax_p2(unsigned n, unsigned r) {
  require_inputs(n, "nummax_p2");
  Polynomial acc = zero(kTwo, n);
  if (r < 32 && (std::uint64_t{1} << r) <= n) {
    acc += elementary_symmetric(static_cast<unsigned>(1u << r), kTwo, n);
  }
  const auto w = digit(n, r, kTwo);
  if (w.value != 0) {
    Polynomial prod = one(kTwo, n);
    for (const auto& x : variables(kTwo, n)) prod *= 1 - x;
    acc += prod;
  }
  return acc;
}

Polynomial ismax_2bit_p2(unsigned n) {
  require_inputs(n, "ismax_2bit_p2");
  const unsigned arity = 2 * (n + 1);
  const auto v = variables(kTwo, arity);
  const auto& y1 = v[0];
  const auto& y0 = v[1];
  Polynomial not_both = one(kTwo, arity);
  Polynomial high_clear = one(kTwo, arity);
  Polynomial all_clear = one(kTwo, arity);
  for (unsigned i = 0; i < n; ++i) {
    const auto& hi = v[2 + 2 * i];
    const auto& lo = v[3 + 2 * i];
    not_both *= 1 + hi * lo;
    high_clear *= 1 + hi;
    all_clear *= (1 + hi) * (1 + lo);
  }
  return y1 * y0 + y1 * not_both + (y1 + y0) * high_clear + (y1 + 1) * all_clear;
}

}  // namespace minpoly

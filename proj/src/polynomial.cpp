#include "minpoly/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

namespace minpoly {

namespace {

std::atomic<std::size_t> g_table_limit{kDefaultTableLimit};

void require_same_ring(const Polynomial& f, const Polynomial& g, const char* op) {
  if (f.modulus() != g.modulus() || f.arity() != g.arity()) {
    std::ostringstream os;
    os << op << ": ring mismatch (p=" << f.characteristic() << ", n=" << f.arity()
       << ") vs (p=" << g.characteristic() << ", n=" << g.arity() << ")";
    throw RingMismatch(os.str());
  }
}

std::vector<std::size_t> strides(std::uint32_t p, unsigned n) {
  std::vector<std::size_t> s(n);
  std::size_t acc = 1;
  for (unsigned v = 0; v < n; ++v) {
    s[v] = acc;
    acc *= p;
  }
  return s;
}

std::vector<std::size_t> nonzero_indices(std::span<const std::uint32_t> c) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out.push_back(k);
  }
  return out;
}

// x^e with e >= p folded back into 1..p-1.
std::uint32_t reduce_exponent(std::uint64_t e, std::uint32_t p) {
  if (e < p) return static_cast<std::uint32_t>(e);
  return static_cast<std::uint32_t>((e - 1) % (p - 1) + 1);
}

}  // namespace

std::size_t table_limit() noexcept { return g_table_limit.load(std::memory_order_relaxed); }

void set_table_limit(std::size_t limit) noexcept {
  g_table_limit.store(limit, std::memory_order_relaxed);
}

std::size_t table_size(PrimeModulus p, unsigned n, std::size_t limit) {
  std::size_t size = 1;
  for (unsigned v = 0; v < n; ++v) {
    if (size > limit / p.value()) {
      throw SizeLimitExceeded("table size " + std::to_string(p.value()) + "^" + std::to_string(n) +
                              " exceeds limit " + std::to_string(limit));
    }
    size *= p.value();
  }
  if (size > limit) {
    throw SizeLimitExceeded("table size exceeds limit " + std::to_string(limit));
  }
  return size;
}

Polynomial::Polynomial(PrimeModulus p, unsigned n) : p_(p), n_(n), c_(table_size(p, n), 0) {}

Polynomial::Polynomial(PrimeModulus p, unsigned n, std::vector<std::uint32_t> coefficients)
    : p_(p), n_(n), c_(std::move(coefficients)) {
  if (c_.size() != table_size(p, n)) {
    throw DomainError("coefficient table has " + std::to_string(c_.size()) + " entries, expected " +
                      std::to_string(table_size(p, n)));
  }
  for (auto c : c_) {
    if (c >= p.value()) throw ModulusMismatch("coefficient " + std::to_string(c) + " not reduced");
  }
}

Polynomial Polynomial::from_terms(PrimeModulus p, unsigned n, std::span<const Term> terms) {
  Polynomial f(p, n);
  const PrimeField field(p);
  ExponentVector reduced(n);
  for (const auto& t : terms) {
    if (t.exponents.size() != n) throw DomainError("term has wrong number of exponents");
    for (unsigned v = 0; v < n; ++v) reduced[v] = reduce_exponent(t.exponents[v], p.value());
    auto& slot = f.c_[f.index_of(reduced)];
    slot = detail::add_mod(slot, field.element(t.coefficient).value, p.value());
  }
  return f;
}

FieldElement Polynomial::coefficient(std::span<const std::uint32_t> exponents) const {
  return {c_[index_of(exponents)]};
}

std::size_t Polynomial::index_of(std::span<const std::uint32_t> exponents) const {
  if (exponents.size() != n_) throw DomainError("exponent vector has wrong length");
  std::size_t index = 0;
  for (unsigned v = n_; v-- > 0;) {
    if (exponents[v] >= p_.value()) throw DomainError("exponent exceeds p-1");
    index = index * p_.value() + exponents[v];
  }
  return index;
}

ExponentVector Polynomial::exponents_of(std::size_t index) const {
  ExponentVector e(n_);
  for (unsigned v = 0; v < n_; ++v) {
    e[v] = static_cast<std::uint32_t>(index % p_.value());
    index /= p_.value();
  }
  return e;
}

bool Polynomial::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

std::size_t Polynomial::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](std::uint32_t c) { return c != 0; }));
}

Polynomial zero(PrimeModulus p, unsigned n) { return Polynomial(p, n); }

Polynomial one(PrimeModulus p, unsigned n) { return constant(1, p, n); }

Polynomial constant(std::int64_t c, PrimeModulus p, unsigned n) {
  std::vector<std::uint32_t> coeffs(table_size(p, n), 0);
  coeffs[0] = PrimeField(p).element(c).value;
  return Polynomial(p, n, std::move(coeffs));
}

Polynomial variable(unsigned i, PrimeModulus p, unsigned n) {
  if (i >= n) {
    throw DomainError("variable index " + std::to_string(i) + " out of range for n=" +
                      std::to_string(n));
  }
  std::vector<std::uint32_t> coeffs(table_size(p, n), 0);
  std::size_t index = 1;
  for (unsigned v = 0; v < i; ++v) index *= p.value();
  coeffs[index] = 1;
  return Polynomial(p, n, std::move(coeffs));
}

Polynomial& operator+=(Polynomial& f, const Polynomial& g) { return f = f + g; }
Polynomial& operator-=(Polynomial& f, const Polynomial& g) { return f = f - g; }
Polynomial& operator*=(Polynomial& f, const Polynomial& g) { return f = f * g; }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g, "add");
  const auto p = f.characteristic();
  std::vector<std::uint32_t> out(f.size());
  auto a = f.coefficients();
  auto b = g.coefficients();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = detail::add_mod(a[k], b[k], p);
  return Polynomial(f.modulus(), f.arity(), std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g, "sub");
  const auto p = f.characteristic();
  std::vector<std::uint32_t> out(f.size());
  auto a = f.coefficients();
  auto b = g.coefficients();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = detail::sub_mod(a[k], b[k], p);
  return Polynomial(f.modulus(), f.arity(), std::move(out));
}

Polynomial operator-(const Polynomial& f) { return zero(f.modulus(), f.arity()) - f; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g, "mul");
  const std::uint32_t p = f.characteristic();
  const unsigned n = f.arity();
  auto nz_f = nonzero_indices(f.coefficients());
  auto nz_g = nonzero_indices(g.coefficients());
  const Polynomial* outer = &f;
  const Polynomial* inner = &g;
  if (nz_f.size() > nz_g.size()) {
    std::swap(nz_f, nz_g);
    std::swap(outer, inner);
  }
  std::vector<std::uint32_t> out(f.size(), 0);
  if (nz_f.empty()) return Polynomial(f.modulus(), n, std::move(out));

  if (p == 2) {
    // Multilinear over F_2: exponent vectors combine by bitwise or.
    for (auto i : nz_f) {
      for (auto j : nz_g) out[i | j] ^= 1u;
    }
    return Polynomial(f.modulus(), n, std::move(out));
  }

  const auto stride = strides(p, n);
  std::vector<std::uint32_t> inner_digits(nz_g.size() * n);
  for (std::size_t j = 0; j < nz_g.size(); ++j) {
    std::size_t k = nz_g[j];
    for (unsigned v = 0; v < n; ++v) {
      inner_digits[j * n + v] = static_cast<std::uint32_t>(k % p);
      k /= p;
    }
  }
  std::vector<std::uint32_t> outer_digits(n);
  auto a = outer->coefficients();
  auto b = inner->coefficients();
  for (auto i : nz_f) {
    std::size_t k = i;
    for (unsigned v = 0; v < n; ++v) {
      outer_digits[v] = static_cast<std::uint32_t>(k % p);
      k /= p;
    }
    const std::uint32_t ca = a[i];
    for (std::size_t j = 0; j < nz_g.size(); ++j) {
      std::size_t index = 0;
      const std::uint32_t* d = &inner_digits[j * n];
      for (unsigned v = 0; v < n; ++v) {
        std::uint32_t e = outer_digits[v] + d[v];
        if (e >= p) e -= p - 1;
        index += e * stride[v];
      }
      out[index] = detail::add_mod(out[index], detail::mul_mod(ca, b[nz_g[j]], p), p);
    }
  }
  return Polynomial(f.modulus(), n, std::move(out));
}

Polynomial operator+(const Polynomial& f, std::int64_t c) {
  return f + constant(c, f.modulus(), f.arity());
}
Polynomial operator+(std::int64_t c, const Polynomial& f) { return f + c; }
Polynomial operator-(const Polynomial& f, std::int64_t c) {
  return f - constant(c, f.modulus(), f.arity());
}
Polynomial operator-(std::int64_t c, const Polynomial& f) {
  return constant(c, f.modulus(), f.arity()) - f;
}
Polynomial operator*(std::int64_t c, const Polynomial& f) {
  return scale(PrimeField(f.modulus()).element(c), f);
}

Polynomial scale(FieldElement c, const Polynomial& f) {
  const auto p = f.characteristic();
  if (c.value >= p) throw ModulusMismatch("scale factor not reduced mod p");
  std::vector<std::uint32_t> out(f.coefficients().begin(), f.coefficients().end());
  for (auto& x : out) x = detail::mul_mod(x, c.value, p);
  return Polynomial(f.modulus(), f.arity(), std::move(out));
}

Polynomial pow(const Polynomial& f, std::uint64_t k) {
  Polynomial result = one(f.modulus(), f.arity());
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool equals(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g, "equals");
  return std::ranges::equal(f.coefficients(), g.coefficients());
}

FieldElement eval(const Polynomial& f, std::span<const FieldElement> point) {
  const unsigned n = f.arity();
  if (point.size() != n) {
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(n));
  }
  const std::uint32_t p = f.characteristic();
  for (auto a : point) {
    if (a.value >= p) throw ModulusMismatch("point coordinate not reduced mod p");
  }
  std::vector<std::uint32_t> work(f.coefficients().begin(), f.coefficients().end());
  std::size_t block = work.size();
  // Fold the most significant variable first: each pass shrinks the table by p.
  for (unsigned v = n; v-- > 0;) {
    block /= p;
    const std::uint32_t a = point[v].value;
    for (std::size_t j = 0; j < block; ++j) {
      std::uint32_t acc = 0;
      for (std::uint32_t e = p; e-- > 0;) {
        acc = detail::add_mod(detail::mul_mod(acc, a, p), work[e * block + j], p);
      }
      work[j] = acc;
    }
  }
  return {work[0]};
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> subs) {
  const unsigned n = f.arity();
  if (subs.size() != n) throw DomainError("compose: substitution count must equal arity");
  if (n == 0) throw DomainError("compose: constant polynomial has no variables to substitute");
  const PrimeModulus p = f.modulus();
  const unsigned m = subs[0].arity();
  for (const auto& s : subs) {
    if (s.modulus() != p || s.arity() != m) throw RingMismatch("compose: substituents disagree");
  }
  const std::uint32_t q = p.value();
  const auto stride = strides(q, n);
  const auto c = f.coefficients();

  std::vector<std::vector<std::optional<Polynomial>>> powers(n, std::vector<std::optional<Polynomial>>(q));
  auto power = [&](unsigned v, std::uint32_t e) -> const Polynomial& {
    auto& slot = powers[v][e];
    if (!slot) slot = pow(subs[v], e);
    return *slot;
  };

  // Substitutes into the block of f where variables above v are fixed.
  std::function<std::optional<Polynomial>(int, std::size_t)> rec =
      [&](int v, std::size_t offset) -> std::optional<Polynomial> {
    if (v < 0) {
      if (c[offset] == 0) return std::nullopt;
      return constant(c[offset], p, m);
    }
    std::optional<Polynomial> acc;
    for (std::uint32_t e = 0; e < q; ++e) {
      auto part = rec(v - 1, offset + e * stride[v]);
      if (!part) continue;
      Polynomial term = e == 0 ? std::move(*part) : *part * power(static_cast<unsigned>(v), e);
      acc = acc ? *acc + term : std::move(term);
    }
    return acc;
  };
  auto result = rec(static_cast<int>(n) - 1, 0);
  return result ? std::move(*result) : zero(p, m);
}

Polynomial extend_arity(const Polynomial& f, unsigned m) {
  if (m < f.arity()) throw DomainError("extend_arity: cannot drop variables");
  std::vector<std::uint32_t> coeffs(table_size(f.modulus(), m), 0);
  std::copy(f.coefficients().begin(), f.coefficients().end(), coeffs.begin());
  return Polynomial(f.modulus(), m, std::move(coeffs));
}

Polynomial elementary_symmetric(unsigned i, PrimeModulus p, unsigned n) {
  if (i > n) {
    throw DomainError("elementary symmetric index " + std::to_string(i) + " exceeds n=" +
                      std::to_string(n));
  }
  std::vector<std::uint32_t> coeffs(table_size(p, n), 0);
  const auto stride = strides(p.value(), n);
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + i, true);
  // Walk all i-subsets of the variables.
  do {
    std::size_t index = 0;
    for (unsigned v = 0; v < n; ++v) {
      if (chosen[v]) index += stride[v];
    }
    coeffs[index] = 1;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return Polynomial(p, n, std::move(coeffs));
}

std::vector<std::uint32_t> max_degree_per_variable(const Polynomial& f) {
  std::vector<std::uint32_t> degrees(f.arity(), 0);
  const auto c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const auto e = f.exponents_of(k);
    for (unsigned v = 0; v < f.arity(); ++v) degrees[v] = std::max(degrees[v], e[v]);
  }
  return degrees;
}

std::uint32_t total_degree(const Polynomial& f) {
  std::uint32_t best = 0;
  const auto c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::uint32_t d = 0;
    for (auto e : f.exponents_of(k)) d += e;
    best = std::max(best, d);
  }
  return best;
}

bool is_minimal_form(const Polynomial& f) {
  const auto degrees = max_degree_per_variable(f);
  return std::all_of(degrees.begin(), degrees.end(),
                     [&](std::uint32_t d) { return d < f.characteristic(); });
}

std::string to_string(const Polynomial& f) {
  struct Entry {
    std::uint32_t degree;
    ExponentVector exps;
    std::uint32_t coeff;
  };
  std::vector<Entry> terms;
  const auto c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    auto e = f.exponents_of(k);
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    terms.push_back({d, std::move(e), c[k]});
  }
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    // x0 < x1 < ...: the highest variable decides first.
    return std::lexicographical_compare(a.exps.rbegin(), a.exps.rend(), b.exps.rbegin(),
                                        b.exps.rend());
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    bool need_star = false;
    if (t.coeff != 1 || t.degree == 0) {
      os << t.coeff;
      need_star = true;
    }
    for (unsigned v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << v;
      if (t.exps[v] > 1) os << '^' << t.exps[v];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace minpoly

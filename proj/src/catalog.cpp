#include "minpoly/catalog.hpp"

#include <algorithm>
#include <string>

#include "minpoly/formulas.hpp"

namespace minpoly {

namespace {

[[noreturn]] void reject(const std::string& message) { throw DomainError(message); }

void need_inputs(unsigned n) {
  if (n == 0) reject("n must be at least 1");
}

void need_p(std::uint32_t p, std::uint32_t expected) {
  if (p != expected) reject("this formula requires p=" + std::to_string(expected));
}

void need_n(unsigned n, unsigned expected) {
  if (n != expected) reject("this formula requires n=" + std::to_string(expected));
}

void any_inputs(std::uint32_t, unsigned n, unsigned) { need_inputs(n); }

void p2_inputs(std::uint32_t p, unsigned n, unsigned) {
  need_p(p, 2);
  need_inputs(n);
}

void p3_inputs(std::uint32_t p, unsigned n, unsigned) {
  need_p(p, 3);
  need_inputs(n);
}

void two_inputs(std::uint32_t, unsigned n, unsigned) { need_n(n, 2); }

Polynomial best_max(PrimeModulus p, unsigned n) {
  if (p.value() == 2) return max_p2(n);
  if (p.value() == 3) return max_p3(n);
  if (p.value() == 5 && n == 2) return max_p5_n2();
  if (p.value() == 5 && n == 3) return max_p5_n3();
  if (n == 2) return max_n2(p);
  return max_general(p, n);
}

Polynomial best_min(PrimeModulus p, unsigned n) {
  if (p.value() == 2) return min_p2(n);
  if (p.value() == 3) return min_p3(n);
  return min_general(p, n);
}

Polynomial argmax0_general(PrimeModulus p, unsigned n) { return argmax_digit_general(p, n, 0); }

Polynomial best_argmax(PrimeModulus p, unsigned n, unsigned r) {
  if (p.value() == 2) return argmax_p2(n, r);
  if (p.value() == 3 && n == 3 && r == 0) return argmax_p3_n3();
  if (n == 2 && r == 0) return argmax0_n2(p);
  return argmax_digit_general(p, n, r);
}

Polynomial best_ismax(PrimeModulus p, unsigned n) {
  if (p.value() == 2) return ismax_p2(n);
  if (p.value() == 3) return ismax_p3(n);
  return ismax_general(p, n);
}

Polynomial best_nummax(PrimeModulus p, unsigned n, unsigned r) {
  if (p.value() == 2) return nummax_p2(n, r);
  if (r == 0) return nummax0_general(p, n);
  return nummax_digit_subsets(p, n, r);
}

std::vector<FormulaParams> grid(std::initializer_list<std::uint32_t> primes, unsigned n_lo,
                                unsigned n_hi, unsigned r_hi = 0) {
  std::vector<FormulaParams> out;
  for (auto p : primes) {
    for (unsigned n = n_lo; n <= n_hi; ++n) {
      for (unsigned r = 0; r <= r_hi; ++r) out.push_back({p, n, r});
    }
  }
  return out;
}

std::vector<FormulaParams> join(std::vector<FormulaParams> a, const std::vector<FormulaParams>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> table{
      // max and min
      {"max_general", "max from low-pass products", "any p, n >= 1",
       "max(x) = sum_{t=1}^{p-1} (1 - prod_i L_t(x_i))", FunctionKind::max, std::nullopt,
       std::nullopt, false, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned) { return max_general(p, n); },
       grid({2, 3}, 1, 4)},
      {"max_p2", "max over F_2", "p=2 only", "max(x) = prod_i (1 + x_i) - 1 = sum_{i>=1} e_i",
       FunctionKind::max, 2, std::nullopt, false, p2_inputs,
       [](PrimeModulus, unsigned n, unsigned) { return max_p2(n); }, grid({2}, 1, 8)},
      {"min_p2", "min over F_2", "p=2 only", "min(x) = prod_i x_i = e_n", FunctionKind::min, 2,
       std::nullopt, false, p2_inputs,
       [](PrimeModulus, unsigned n, unsigned) { return min_p2(n); }, grid({2}, 1, 8)},
      {"max_p3", "max over F_3", "p=3 only",
       "max(x) = (sum_i e_{2i}) (sum_i e_i) - 1", FunctionKind::max, 3, std::nullopt, false,
       p3_inputs, [](PrimeModulus, unsigned n, unsigned) { return max_p3(n); },
       grid({3}, 1, 5)},
      {"min_p3", "min over F_3", "p=3 only",
       "min(x) = e_n (1 + sum_{i>=1} (-1)^i e_i + e_n)", FunctionKind::min, 3, std::nullopt,
       false, p3_inputs, [](PrimeModulus, unsigned n, unsigned) { return min_p3(n); },
       grid({3}, 1, 5)},
      {"max5", "max over F_5 for two or three inputs", "p=5 only, n in {2,3}",
       "max = (1 + e_1 + ... + e_n) g(e_1, ..., e_n) - 1 with the tabulated g",
       FunctionKind::max, 5, std::nullopt, false,
       [](std::uint32_t p, unsigned n, unsigned) {
         need_p(p, 5);
         if (n != 2 && n != 3) reject("max5 requires n=2 or n=3");
       },
       [](PrimeModulus, unsigned n, unsigned) { return n == 2 ? max_p5_n2() : max_p5_n3(); },
       grid({5}, 2, 3)},
      {"max_n2", "two-input max for odd p", "p >= 3, n=2",
       "max(x0,x1) = (x1-x0) sum_{d=2}^{p-2} d^{-1} (x0+1)..(x0+d) x1..(x1-p+d+1) + x0 "
       "+ (x0+1)^2 (1-(x1+1)^{p-1}) + (1-x0^{p-1}) x1^2",
       FunctionKind::max, std::nullopt, 2, false,
       [](std::uint32_t p, unsigned n, unsigned) {
         if (p < 3) reject("max_n2 requires p >= 3");
         need_n(n, 2);
       },
       [](PrimeModulus p, unsigned, unsigned) { return max_n2(p); }, grid({3, 5}, 2, 2)},
      {"min_general", "min as the involution conjugate of max_general", "any p, n >= 1",
       "min(x) = p-1 - max(p-1-x)", FunctionKind::min, std::nullopt, std::nullopt, false,
       any_inputs, [](PrimeModulus p, unsigned n, unsigned) { return min_general(p, n); },
       grid({2, 3}, 1, 3)},

      // argmax and argmin
      {"argmax_digit", "r-th digit of argmax from delta/low-pass products", "any p, n >= 1, r >= 0",
       "argmax^(r)(x) = sum_i i^(r) sum_t delta_t(x_i) prod_{j<i} L_t(x_j) prod_{k>i} L_{t+1}(x_k)",
       FunctionKind::argmax_digit, std::nullopt, std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) { return argmax_digit_general(p, n, r); },
       grid({2, 3}, 1, 4, 1)},
      {"argmin_digit", "r-th digit of argmin via reflected inputs", "any p, n >= 1, r >= 0",
       "argmin^(r)(x) = argmax^(r)(p-1-x)", FunctionKind::argmin_digit, std::nullopt,
       std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) { return argmin_digit_general(p, n, r); },
       grid({2, 3}, 1, 3, 1)},
      {"argmax_block", "argmax^(r) as argmax^(0) of block maxima", "any p, n >= 1, r >= 0",
       "argmax^(r)(x) = argmax^(0)(max(x_0..x_{p^r-1}), max(x_{p^r}..), ...)",
       FunctionKind::argmax_digit, std::nullopt, std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) {
         return argmax_block_recurrence(p, n, r, argmax0_general, best_max);
       },
       join(grid({2}, 1, 6, 2), grid({3}, 3, 3, 1))},
      {"argmax_extend", "argmax^(r) by extending the input one value at a time",
       "any p, n >= 1, r >= 0",
       "argmax^(r)(x, x_n) = argmax^(r)(x) (1 - A) + n^(r) A, A = argmax^(0)(max(x), x_n)",
       FunctionKind::argmax_digit, std::nullopt, std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) {
         return argmax_by_extension(p, n, r, argmax0_n2(p), best_max);
       },
       join(grid({2}, 1, 6, 2), grid({3}, 3, 3, 1))},
      {"argmax_p2", "argmax^(r) over F_2 as a sum of prefix products", "p=2 only",
       "argmax^(r)(x_0..x_{(2k+2)2^r-1}) = sum_{i=1}^{2k+2} (1+x_0)...(1+x_{i 2^r - 1})",
       FunctionKind::argmax_digit, 2, std::nullopt, true, p2_inputs,
       [](PrimeModulus, unsigned n, unsigned r) { return argmax_p2(n, r); },
       grid({2}, 1, 8, 2)},
      {"argmax_p2_selector", "argmax^(r) over F_2 from the index set S(r, n-1)", "p=2 only",
       "argmax^(r)(x_0..x_m) = sum_{i in S(r,m)} (1+x_0)...(1+x_i)", FunctionKind::argmax_digit,
       2, std::nullopt, true, p2_inputs,
       [](PrimeModulus, unsigned n, unsigned r) { return argmax_p2_selector(n - 1, r); },
       grid({2}, 1, 8, 2)},
      {"argmax_p3_n3", "argmax^(0) of three inputs over F_3", "p=3 only, n=3",
       "2 (x0 x1^2 x2 + x1^2 x2^2 + x1^2 x2 + 2 x1 x2^2 + x0 x1 + 2 x0 x2 + 2 x1^2 + x1 x2 + "
       "x2^2)(x0 + 1)",
       FunctionKind::argmax_digit, 3, 3, false,
       [](std::uint32_t p, unsigned n, unsigned) {
         need_p(p, 3);
         need_n(n, 3);
       },
       [](PrimeModulus, unsigned, unsigned) { return argmax_p3_n3(); }, grid({3}, 3, 3)},
      {"argmax0_n2", "argmax^(0) of two inputs", "any p, n=2",
       "argmax^(0)(x0,x1) = sum_{d=1}^{p-1} d^{-1} (x0+1)...(x0+d) x1 (x1-1)...(x1-(p-d)+1)",
       FunctionKind::argmax_digit, std::nullopt, 2, false, two_inputs,
       [](PrimeModulus p, unsigned, unsigned) { return argmax0_n2(p); }, grid({2, 3, 5}, 2, 2)},
      {"carry", "carry of adding two base-p digits", "any p, n=2",
       "phi_1(y0,y1) = sum_{d=1}^{p-1} (-1)^d d^{-1} y0 (y0-1)...(y0-d+1) y1 ... (y1-(p-d)+1)",
       FunctionKind::carry, std::nullopt, 2, false, two_inputs,
       [](PrimeModulus p, unsigned, unsigned) { return carry_phi1(p); }, grid({2, 3, 5}, 2, 2)},

      // ismax and nummax
      {"ismax_general", "chi(max(x) = y) from delta/low-pass products",
       "any p, n >= 1 (arity n+1, y first)",
       "ismax(y;x) = sum_t delta_t(y) sum_i prod_{j<i} L_t(x_j) delta_t(x_i) prod_{k>i} L_{t+1}(x_k)",
       FunctionKind::ismax, std::nullopt, std::nullopt, false, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned) { return ismax_general(p, n); },
       grid({2, 3}, 1, 3)},
      {"ismax_p2", "ismax over F_2", "p=2 only (arity n+1, y first)",
       "ismax(y;x) = y + prod_i (1 + x_i)", FunctionKind::ismax, 2, std::nullopt, false,
       p2_inputs, [](PrimeModulus, unsigned n, unsigned) { return ismax_p2(n); },
       grid({2}, 1, 6)},
      {"ismax_p3", "ismax over F_3", "p=3 only (arity n+1, y first)",
       "ismax(y;x) = -y^2 + y (prod (1+x_i)^2 + prod (1-x_i^2) + 1) + prod (1-x_i^2)",
       FunctionKind::ismax, 3, std::nullopt, false, p3_inputs,
       [](PrimeModulus, unsigned n, unsigned) { return ismax_p3(n); }, grid({3}, 1, 4)},
      {"nummax0_general", "count of maximal entries mod p", "any p, n >= 1",
       "nummax^(0)(x) = sum_i sum_t delta_t(x_i) prod_{j != i} L_{t+1}(x_j)",
       FunctionKind::nummax_digit, std::nullopt, std::nullopt, false, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned) { return nummax0_general(p, n); },
       grid({2, 3}, 1, 3)},
      {"nummax_subsets", "r-th digit of the count of maximal entries, by subsets",
       "any p, n >= 1, r >= 0",
       "nummax^(r)(x) = sum_k k^(r) sum_{|I|=k} sum_t prod_{i in I} delta_t(x_i) prod_{j not in I} "
       "L_t(x_j)",
       FunctionKind::nummax_digit, std::nullopt, std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) { return nummax_digit_subsets(p, n, r); },
       grid({2, 3}, 1, 3, 1)},
      {"nummax_p2", "r-th bit of the count of maximal entries over F_2", "p=2 only",
       "nummax^(r)(x) = e_{2^r}(x) + n^(r) prod_i (1 - x_i)", FunctionKind::nummax_digit, 2,
       std::nullopt, true, p2_inputs,
       [](PrimeModulus, unsigned n, unsigned r) { return nummax_p2(n, r); },
       grid({2}, 1, 6, 2)},
      {"ismax_2bit", "ismax for two-bit values over F_2",
       "p=2 only (arity 2n+2: y1, y0, then x_{i,1}, x_{i,0})",
       "y1 y0 + y1 prod (1 + x_{i,1} x_{i,0}) + (y1 + y0) prod (1 + x_{i,1}) + (y1 + 1) prod "
       "(1 + x_{i,1})(1 + x_{i,0})",
       FunctionKind::ismax_2bit, 2, std::nullopt, false, p2_inputs,
       [](PrimeModulus, unsigned n, unsigned) { return ismax_2bit_p2(n); }, grid({2}, 1, 4)},

      // Family names that pick the most specific closed form for (p, n, r).
      {"max", "max, most specific closed form", "any p, n >= 1", "dispatches over max_* entries",
       FunctionKind::max, std::nullopt, std::nullopt, false, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned) { return best_max(p, n); },
       join(grid({2, 3}, 1, 4), grid({5}, 1, 3))},
      {"min", "min, most specific closed form", "any p, n >= 1", "dispatches over min_* entries",
       FunctionKind::min, std::nullopt, std::nullopt, false, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned) { return best_min(p, n); }, grid({2, 3}, 1, 4)},
      {"argmax", "argmax^(r), most specific closed form", "any p, n >= 1, r >= 0",
       "dispatches over argmax_* entries", FunctionKind::argmax_digit, std::nullopt,
       std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) { return best_argmax(p, n, r); },
       grid({2, 3}, 1, 4, 1)},
      {"argmax0", "argmax^(0), most specific closed form", "any p, n >= 1",
       "dispatches over argmax_* entries with r=0", FunctionKind::argmax_digit, std::nullopt,
       std::nullopt, false, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned) { return best_argmax(p, n, 0); },
       grid({2, 3}, 1, 4)},
      {"argmin", "argmin^(r)", "any p, n >= 1, r >= 0", "argmin^(r)(x) = argmax^(r)(p-1-x)",
       FunctionKind::argmin_digit, std::nullopt, std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) { return reflect_inputs(best_argmax(p, n, r)); },
       grid({2, 3}, 1, 3, 1)},
      {"ismax", "ismax, most specific closed form", "any p, n >= 1 (arity n+1, y first)",
       "dispatches over ismax_* entries", FunctionKind::ismax, std::nullopt, std::nullopt, false,
       any_inputs, [](PrimeModulus p, unsigned n, unsigned) { return best_ismax(p, n); },
       grid({2, 3}, 1, 3)},
      {"nummax", "nummax^(r), most specific closed form", "any p, n >= 1, r >= 0",
       "dispatches over nummax_* entries", FunctionKind::nummax_digit, std::nullopt,
       std::nullopt, true, any_inputs,
       [](PrimeModulus p, unsigned n, unsigned r) { return best_nummax(p, n, r); },
       grid({2, 3}, 1, 3, 1)},
      {"ismax2bit", "alias of ismax_2bit", "p=2 only (arity 2n+2)", "see ismax_2bit",
       FunctionKind::ismax_2bit, 2, std::nullopt, false, p2_inputs,
       [](PrimeModulus, unsigned n, unsigned) { return ismax_2bit_p2(n); }, grid({2}, 1, 3)},
  };
  return table;
}

}  // namespace

std::span<const CatalogEntry> catalog() { return entries(); }

const CatalogEntry& find_formula(std::string_view name) {
  const auto& all = entries();
  auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == all.end()) throw DomainError("unknown formula '" + std::string(name) + "'");
  return *it;
}

FormulaId resolve(const CatalogEntry& entry, std::optional<std::uint32_t> p,
                  std::optional<unsigned> n, std::optional<unsigned> r) {
  FormulaId id{std::string(entry.name), 0, 0, 0};
  if (entry.fixed_p) {
    if (p && *p != *entry.fixed_p) {
      reject(std::string(entry.name) + " is defined for p=" + std::to_string(*entry.fixed_p) +
             " only");
    }
    id.p = *entry.fixed_p;
  } else {
    if (!p) reject(std::string(entry.name) + " needs --p");
    id.p = *p;
  }
  if (n) {
    id.n = *n;
  } else if (entry.default_n) {
    id.n = *entry.default_n;
  } else {
    reject(std::string(entry.name) + " needs --n");
  }
  if (r && *r != 0 && !entry.uses_r) reject(std::string(entry.name) + " takes no digit index");
  id.r = r.value_or(0);
  validate(id);
  return id;
}

void validate(const FormulaId& id) {
  const auto& entry = find_formula(id.name);
  const PrimeModulus p(id.p);  // throws for non-primes
  if (entry.fixed_p && id.p != *entry.fixed_p) need_p(id.p, *entry.fixed_p);
  if (!entry.uses_r && id.r != 0) reject(id.name + " takes no digit index");
  entry.validate(p.value(), id.n, id.r);
}

Polynomial build_formula(const FormulaId& id) {
  validate(id);
  return find_formula(id.name).build(PrimeModulus(id.p), id.n, id.r);
}

FunctionSpec function_spec(const FormulaId& id) {
  const auto& entry = find_formula(id.name);
  return FunctionSpec{entry.kind, PrimeModulus(id.p), id.n, id.r};
}

}  // namespace minpoly

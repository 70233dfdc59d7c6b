#include <doctest.h>

#include <algorithm>

#include "minpoly/catalog.hpp"
#include "minpoly/errors.hpp"
#include "minpoly/formulas.hpp"
#include "minpoly/oracle.hpp"
#include "support.hpp"

using namespace minpoly;
using namespace minpoly::testing;

namespace {

const PrimeModulus P2{2}, P3{3}, P5{5}, P7{7}, P11{11}, P13{13};

FieldElement fe(std::uint32_t v) { return FieldElement{v}; }

Polynomial oracle(FunctionKind kind, PrimeModulus p, unsigned n, unsigned r = 0) {
  return interpolate(tabulate(FunctionSpec{kind, p, n, r}));
}

/// True when f computes `spec` at every point.
bool computes(const Polynomial& f, const FunctionSpec& spec) {
  const auto t = tabulate(spec);
  if (f.arity() != t.arity()) return false;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (eval(f, point_at(k, spec.p, t.arity())) != t.value(k)) return false;
  }
  return true;
}

Polynomial argmax0_builder(PrimeModulus p, unsigned n) { return argmax_digit_general(p, n, 0); }
Polynomial max_builder(PrimeModulus p, unsigned n) { return max_general(p, n); }

}  // namespace

TEST_CASE("delta") {
  const auto x = variable(0, P2, 1);
  CHECK(delta(0, P2) == 1 + x);
  CHECK(eval(delta(3, P5), pt({3})) == fe(1));
  CHECK(eval(delta(3, P5), pt({4})) == fe(0));
  for (std::uint32_t t = 0; t < 7; ++t) {
    std::vector<std::uint32_t> v(7, 0);
    v[t] = 1;
    CHECK(delta(t, P7) == interpolate(TruthTable(P7, 1, v)));
    // -prod_{i=1}^{p-1} (x - t + i)
    const auto y = variable(0, P7, 1);
    Polynomial prod = one(P7, 1);
    for (std::int64_t i = 1; i < 7; ++i) prod *= y - static_cast<std::int64_t>(t) + i;
    CHECK(delta(t, P7) == -prod);
  }
  CHECK_THROWS_AS(delta(5, P5), DomainError);
}

TEST_CASE("lowpass") {
  CHECK(lowpass(0, P3).is_zero());
  CHECK(eval(lowpass(2, P3), pt({1})) == fe(1));
  CHECK(eval(lowpass(2, P3), pt({2})) == fe(0));
  CHECK(lowpass(5, P5) == one(P5, 1));
  for (std::uint32_t t = 0; t <= 5; ++t) {
    std::vector<std::uint32_t> v(5);
    for (std::uint32_t a = 0; a < 5; ++a) v[a] = a < t ? 1 : 0;
    CHECK(lowpass(t, P5) == interpolate(TruthTable(P5, 1, v)));
  }
  CHECK_THROWS_AS(lowpass(6, P5), DomainError);
}

TEST_CASE("max_general") {
  CHECK(max_general(P3, 3) == oracle(FunctionKind::max, P3, 3));
  const auto x0 = variable(0, P2, 2), x1 = variable(1, P2, 2);
  CHECK(max_general(P2, 2) == x0 + x1 + x0 * x1);
  CHECK(eval(max_general(P5, 3), pt({0, 0, 0})) == fe(0));
  CHECK_THROWS_AS(max_general(P3, 0), DomainError);
}

TEST_CASE("max and min over F_2") {
  const auto e = [](unsigned i) { return elementary_symmetric(i, P2, 3); };
  CHECK(max_p2(3) == e(1) + e(2) + e(3));
  CHECK(min_p2(3) == e(3));
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(max_p2(n) == oracle(FunctionKind::max, P2, n));
    CHECK(min_p2(n) == oracle(FunctionKind::min, P2, n));
  }
  for_each_point(P2, 4, [](const auto& a) {
    if (std::find(a.begin(), a.end(), fe(0)) != a.end()) REQUIRE(eval(min_p2(4), a) == fe(0));
  });
}

TEST_CASE("max and min over F_3") {
  CHECK(eval(max_p3(2), pt({1, 2})) == fe(2));
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(max_p3(n) == oracle(FunctionKind::max, P3, n));
    CHECK(min_p3(n) == oracle(FunctionKind::min, P3, n));
    CHECK(min_p3(n) == involution_conjugate(max_p3(n)));
  }
  // min = prod x_i^2 + prod x_i (1 - x_i)
  for (unsigned n = 1; n <= 4; ++n) {
    Polynomial sq = one(P3, n), lin = one(P3, n);
    for (unsigned i = 0; i < n; ++i) {
      const auto x = variable(i, P3, n);
      sq *= x * x;
      lin *= x * (1 - x);
    }
    CHECK(min_p3(n) == sq + lin);
  }
}

TEST_CASE("max over F_5 for two and three inputs") {
  const auto e = [](unsigned i, unsigned n) { return elementary_symmetric(i, P5, n); };
  const auto e1 = e(1, 2), e2 = e(2, 2);
  const auto printed2 = (1 + e1 + e2) * (1 + 2 * e1 * e1 * e2 + 4 * e1 * e2 + e2) - 1;
  CHECK(max_p5_n2() == printed2);
  CHECK(max_p5_n2() == oracle(FunctionKind::max, P5, 2));

  const auto f1 = e(1, 3), f2 = e(2, 3), f3 = e(3, 3);
  const auto printed3 =
      (1 + f1 + f2 + f3) * (1 + 2 * f1 * f1 * f2 + f1 * f2 * f3 + 2 * f1 * f3 * f3 + f2 * f2 * f3 +
                            2 * f2 * f3 * f3 + 4 * f1 * f2 + 3 * f1 * f3 + f2 * f3 + 3 * f3 * f3 + f2) -
      1;
  CHECK(max_p5_n3() == printed3);
  CHECK(max_p5_n3() == oracle(FunctionKind::max, P5, 3));
  for (std::uint32_t a = 0; a < 5; ++a) {
    CHECK(eval(max_p5_n2(), pt({4, a})) == fe(4));
    CHECK(eval(max_p5_n3(), pt({a, 4, a})) == fe(4));
  }
}

TEST_CASE("min_general is the conjugate of max_general") {
  for (PrimeModulus p : {P2, P3, P5}) {
    for (unsigned n = 1; n <= 3; ++n) {
      CHECK(min_general(p, n) == oracle(FunctionKind::min, p, n));
      CHECK(min_general(p, n) == involution_conjugate(max_general(p, n)));
    }
  }
}

TEST_CASE("duality between max and min constructors") {
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(min_p2(n) == involution_conjugate(max_p2(n)));
    CHECK(max_p2(n) == involution_conjugate(min_p2(n)));
    CHECK(min_p3(n) == involution_conjugate(max_p3(n)));
    CHECK(min_general(P2, n) == min_p2(n));
    CHECK(min_general(P3, n) == min_p3(n));
  }
}

TEST_CASE("argmax_digit_general") {
  CHECK(argmax_digit_general(P3, 3, 0) == oracle(FunctionKind::argmax_digit, P3, 3, 0));
  CHECK(argmax_digit_general(P3, 3, 2).is_zero());
  CHECK(argmax_digit_general(P2, 2, 1).is_zero());
  const auto x0 = variable(0, P2, 2), x1 = variable(1, P2, 2);
  CHECK(argmax_digit_general(P2, 2, 0) == (1 + x0) * x1);
  for (PrimeModulus p : {P2, P3}) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned r = 0; r <= 1; ++r) {
        CHECK(argmin_digit_general(p, n, r) == oracle(FunctionKind::argmin_digit, p, n, r));
      }
    }
  }
}

TEST_CASE("argmax with a trailing zero input is unchanged") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned r = 0; r <= 2; ++r) {
      const auto longer = argmax_digit_general(P2, n + 1, r);
      std::vector<Polynomial> subs;
      for (unsigned i = 0; i < n; ++i) subs.push_back(variable(i, P2, n));
      subs.push_back(zero(P2, n));
      CHECK(compose(longer, subs) == argmax_digit_general(P2, n, r));
    }
  }
}

TEST_CASE("block recurrence") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned r = 0; r <= 2; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const auto f = argmax_block_recurrence(P2, n, r, argmax0_builder, max_builder);
      CHECK(computes(f, {FunctionKind::argmax_digit, P2, n, r}));
      CHECK(f == argmax_p2(n, r));
    }
  }
  CHECK(argmax_block_recurrence(P2, 4, 1, argmax0_builder, max_builder) == argmax_p2(4, 1));
  CHECK(argmax_block_recurrence(P3, 3, 0, argmax0_builder, max_builder) ==
        argmax_digit_general(P3, 3, 0));
  for (unsigned r = 0; r <= 1; ++r) {
    CHECK(computes(argmax_block_recurrence(P3, 3, r, argmax0_builder, max_builder),
                   {FunctionKind::argmax_digit, P3, 3, r}));
  }
}

TEST_CASE("extension recurrence") {
  const auto a3 = argmax0_n2(P3);
  const auto step = argmax_extend_recursive(P3, 0, a3, 2, a3, max_n2(P3));
  CHECK(step == argmax_p3_n3());
  for (unsigned r = 0; r <= 1; ++r) {
    for (unsigned n = 1; n <= 6; ++n) {
      const auto f = argmax_by_extension(P2, n, r, argmax0_n2(P2), max_builder);
      CHECK(computes(f, {FunctionKind::argmax_digit, P2, n, r}));
      CHECK(f == argmax_p2(n, r));
    }
  }
  CHECK_THROWS_AS(argmax_extend_recursive(P3, 0, a3, 2, a3, max_general(P3, 3)), RingMismatch);
  CHECK_THROWS_AS(argmax_extend_recursive(P3, 0, a3, 2, argmax0_n2(P5), max_n2(P3)), RingMismatch);
}

TEST_CASE("extension keeps the prefix when x_n is not a new strict maximum") {
  const auto prefix = argmax_digit_general(P3, 3, 0);
  const auto f = argmax_extend_recursive(P3, 0, prefix, 3, argmax0_n2(P3), max_general(P3, 3));
  for_each_point(P3, 4, [&](const auto& a) {
    const auto m = std::max({a[0], a[1], a[2]});
    if (a[3] <= m) REQUIRE(eval(f, a) == eval(prefix, std::vector<FieldElement>(a.begin(), a.end() - 1)));
  });
}

TEST_CASE("argmax over F_2") {
  const auto x0 = variable(0, P2, 2), x1 = variable(1, P2, 2);
  CHECK(argmax_p2(2, 0) == (1 + x0) * x1);
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned r = 0; r <= 3; ++r) {
      const auto f = argmax_p2(n, r);
      CHECK(f == oracle(FunctionKind::argmax_digit, P2, n, r));
      CHECK(eval(f, std::vector<FieldElement>(n, fe(0))) == fe(0));
    }
  }
}

TEST_CASE("selector set") {
  CHECK(argmax_p2_selector_set(1, 0) == std::vector<unsigned>{0, 1});
  CHECK(argmax_p2_selector_set(1, 1).empty());
  CHECK(argmax_p2_selector_set(3, 5).empty());
  const auto x0 = variable(0, P2, 2), x1 = variable(1, P2, 2);
  CHECK(argmax_p2_selector(1, 0) == (1 + x0) * x1);
  for (unsigned n = 0; n < 12; ++n) {
    for (unsigned r = 0; r <= 3; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const auto f = argmax_p2_selector(n, r);
      CHECK(f == oracle(FunctionKind::argmax_digit, P2, n + 1, r));
      CHECK(f == argmax_p2(n + 1, r));
      if ((1u << r) > n) CHECK(f.is_zero());
    }
  }
}

TEST_CASE("argmax over F_3 with three inputs") {
  const auto x0 = variable(0, P3, 3), x1 = variable(1, P3, 3), x2 = variable(2, P3, 3);
  const auto printed =
      2 *
      (x0 * x1 * x1 * x2 + x1 * x1 * x2 * x2 + x1 * x1 * x2 + 2 * x1 * x2 * x2 + x0 * x1 +
       2 * x0 * x2 + 2 * x1 * x1 + x1 * x2 + x2 * x2) *
      (x0 + 1);
  CHECK(argmax_p3_n3() == printed);
  CHECK(argmax_p3_n3() == oracle(FunctionKind::argmax_digit, P3, 3, 0));
  CHECK(max_degree_per_variable(argmax_p3_n3()) == std::vector<std::uint32_t>{2, 2, 2});
  CHECK(eval(argmax_p3_n3(), pt({2, 2, 2})) == fe(0));
  CHECK(eval(argmax_p3_n3(), pt({0, 0, 2})) == fe(2));
}

TEST_CASE("carry") {
  for (PrimeModulus p : {P2, P3, P5, P7, P11}) {
    const auto f = carry_phi1(p);
    CHECK(f == oracle(FunctionKind::carry, p, 2));
    for (std::uint32_t y0 = 0; y0 < p.value(); ++y0) {
      for (std::uint32_t y1 = 0; y1 < p.value(); ++y1) {
        REQUIRE(eval(f, pt({y0, y1})).value == (y0 + y1 >= p.value() ? 1u : 0u));
      }
    }
    CHECK(eval(f, pt({p.value() - 1, 1})) == fe(1));
  }
}

TEST_CASE("two-input argmax printed forms") {
  {
    const auto x0 = variable(0, P2, 2), x1 = variable(1, P2, 2);
    CHECK(argmax0_n2(P2) == (x0 + 1) * x1);
  }
  {
    const auto x0 = variable(0, P3, 2), x1 = variable(1, P3, 2);
    CHECK(argmax0_n2(P3) == -((x0 + 1) * (x0 - x1) * x1));
  }
  {
    const auto x0 = variable(0, P5, 2), x1 = variable(1, P5, 2);
    CHECK(argmax0_n2(P5) == -((x0 + 1) * (x0 * x0 - x0 * x1 + x0 + x1 * x1) * (x0 - x1) * x1));
  }
  {
    const auto x0 = variable(0, P7, 2), x1 = variable(1, P7, 2);
    const auto quartic = pow(x0, 4) + 5 * pow(x0, 3) * x1 + 2 * pow(x0, 3) +
                         3 * pow(x0, 2) * pow(x1, 2) + pow(x0, 2) * x1 + 4 * pow(x0, 2) +
                         5 * x0 * pow(x1, 3) + 6 * x0 * pow(x1, 2) + 3 * x0 + pow(x1, 4);
    CHECK(argmax0_n2(P7) == -(quartic * (x0 + 1) * (x0 - x1) * x1));
  }
  for (PrimeModulus p : {P2, P3, P5, P7, P11}) {
    CHECK(argmax0_n2(p) == oracle(FunctionKind::argmax_digit, p, 2, 0));
    const std::vector<Polynomial> subs{static_cast<std::int64_t>(p.value() - 1) - variable(0, p, 2),
                                       variable(1, p, 2)};
    CHECK(argmax0_n2(p) == compose(carry_phi1(p), subs));
  }
}

TEST_CASE("two-input max") {
  for (PrimeModulus p : {P3, P5, P7, P11, P13}) {
    const auto f = max_n2(p);
    CHECK(f == oracle(FunctionKind::max, p, 2));
    const auto a = argmax0_n2(p);
    const auto x0 = variable(0, p, 2), x1 = variable(1, p, 2);
    CHECK(f == x0 * (1 - a) + x1 * a);
    for (std::uint32_t t = 0; t < p.value(); ++t) CHECK(eval(f, pt({t, t})) == fe(t));
  }
  CHECK_THROWS_AS(max_n2(P2), DomainError);
}

TEST_CASE("max by nesting the two-input form") {
  for (PrimeModulus p : {P3, P5}) {
    const unsigned n = 3;
    std::vector<Polynomial> subs{extend_arity(max_n2(p), n), variable(2, p, n)};
    const auto nested = compose(max_n2(p), subs);
    CHECK(computes(nested, {FunctionKind::max, p, n, 0}));
    CHECK(nested == max_general(p, n));
  }
}

TEST_CASE("ismax and nummax general forms") {
  CHECK(ismax_general(P3, 2) == oracle(FunctionKind::ismax, P3, 2));
  CHECK(eval(nummax0_general(P5, 3), pt({2, 2, 2})) == fe(3));
  CHECK(nummax_digit_subsets(P2, 3, 1) == oracle(FunctionKind::nummax_digit, P2, 3, 1));
  for (PrimeModulus p : {P2, P3}) {
    for (unsigned n = 1; n <= 3; ++n) {
      CHECK(ismax_general(p, n) == oracle(FunctionKind::ismax, p, n));
      CHECK(nummax0_general(p, n) == oracle(FunctionKind::nummax_digit, p, n, 0));
      for (unsigned r = 0; r <= 2; ++r) {
        CHECK(nummax_digit_subsets(p, n, r) == oracle(FunctionKind::nummax_digit, p, n, r));
      }
    }
  }
}

TEST_CASE("ismax closed forms") {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto y = variable(0, P2, n + 1);
    Polynomial prod = one(P2, n + 1);
    for (unsigned i = 1; i <= n; ++i) prod *= 1 + variable(i, P2, n + 1);
    CHECK(ismax_p2(n) == y + prod);
    CHECK(ismax_p2(n) == oracle(FunctionKind::ismax, P2, n));
  }
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(ismax_p3(n) == oracle(FunctionKind::ismax, P3, n));
    std::vector<FieldElement> zeros(n + 1, fe(0));
    CHECK(eval(ismax_p3(n), zeros) == fe(1));
  }
}

TEST_CASE("nummax over F_2") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned r = 0; r <= 3; ++r) {
      const auto f = nummax_p2(n, r);
      CHECK(f == oracle(FunctionKind::nummax_digit, P2, n, r));
      CHECK(eval(f, std::vector<FieldElement>(n, fe(0))) == digit(n, r, P2));
    }
    std::vector<FieldElement> one_hot(n, fe(0));
    one_hot[n / 2] = fe(1);
    CHECK(eval(nummax_p2(n, 0), one_hot) == fe(1));
  }
}

TEST_CASE("two-bit ismax") {
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(ismax_2bit_p2(n) == oracle(FunctionKind::ismax_2bit, P2, n));
  }
  // y = 3 with some x_i = 3
  CHECK(eval(ismax_2bit_p2(2), pt({1, 1, 0, 1, 1, 1})) == fe(1));
  // y = 0 with a nonzero x_i
  CHECK(eval(ismax_2bit_p2(2), pt({0, 0, 0, 0, 0, 1})) == fe(0));
  CHECK(eval(ismax_2bit_p2(2), pt({0, 0, 0, 0, 0, 0})) == fe(1));
}

TEST_CASE("argmax reports the least maximizing index on ties") {
  for (PrimeModulus p : {P2, P3}) {
    for (unsigned n = 2; n <= 4; ++n) {
      for (unsigned r = 0; r <= 1; ++r) {
        const auto f = argmax_digit_general(p, n, r);
        for_each_point(p, n, [&](const auto& a) {
          const auto m = *std::max_element(a.begin(), a.end());
          if (std::count(a.begin(), a.end(), m) < 2) return;
          const auto first = static_cast<std::size_t>(std::find(a.begin(), a.end(), m) - a.begin());
          REQUIRE(eval(f, a) == digit(first, r, p));
        });
      }
    }
  }
}

TEST_CASE("every catalog entry is canonical and matches its oracle") {
  for (const auto& entry : catalog()) {
    for (const auto& c : entry.default_cases) {
      const FormulaId id{std::string(entry.name), c.p, c.n, c.r};
      CAPTURE(id.name);
      CAPTURE(id.p);
      CAPTURE(id.n);
      CAPTURE(id.r);
      const auto f = build_formula(id);
      REQUIRE(is_minimal_form(f));
      REQUIRE(f == interpolate(tabulate(function_spec(id))));
    }
  }
}

TEST_CASE("catalog flag validation") {
  CHECK_THROWS_AS(find_formula("no_such_formula"), DomainError);
  CHECK_THROWS_AS(resolve(find_formula("max_p3"), 5u, 2u, std::nullopt), DomainError);
  CHECK_THROWS_AS(resolve(find_formula("max_n2"), 2u, std::nullopt, std::nullopt), DomainError);
  CHECK_THROWS_AS(resolve(find_formula("max5"), 5u, 4u, std::nullopt), DomainError);
  CHECK_THROWS_AS(resolve(find_formula("max_general"), 4u, 2u, std::nullopt), DomainError);
  const auto id = resolve(find_formula("max_p3"), std::nullopt, 4u, std::nullopt);
  CHECK(id.p == 3);
  CHECK(id.n == 4);
  CHECK(resolve(find_formula("max"), 3u, 4u, std::nullopt).name == "max");
  CHECK(build_formula(resolve(find_formula("max"), 3u, 1u, std::nullopt)) == variable(0, P3, 1));
}

TEST_CASE("catalog lists every constructor family with its constraint") {
  std::vector<std::string> names;
  for (const auto& e : catalog()) {
    names.emplace_back(e.name);
    CHECK_FALSE(e.constraint.empty());
    CHECK_FALSE(e.identity.empty());
    CHECK_FALSE(e.default_cases.empty());
  }
  for (const char* required :
       {"max_general", "max_p2", "min_p2", "max_p3", "min_p3", "max5", "max_n2", "min_general",
        "argmax_digit", "argmin_digit", "argmax_block", "argmax_extend", "argmax_p2",
        "argmax_p2_selector", "argmax_p3_n3", "argmax0_n2", "carry", "ismax_general", "ismax_p2",
        "ismax_p3", "nummax0_general", "nummax_subsets", "nummax_p2", "ismax_2bit"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  CHECK(find_formula("max_p3").constraint == "p=3 only");
}

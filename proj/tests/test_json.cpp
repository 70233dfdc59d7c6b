#include <doctest.h>

#include "minpoly/errors.hpp"
#include "minpoly/formulas.hpp"
#include "minpoly/json_io.hpp"
#include "support.hpp"

using namespace minpoly;
using namespace minpoly::testing;
using nlohmann::json;

TEST_CASE("polynomial JSON layout") {
  const auto f = argmax0_n2(PrimeModulus(2));
  CHECK(dump(to_json(f)) == "{\"coeffs\":[0,0,1,1],\"n\":2,\"p\":2}\n");
}

TEST_CASE("polynomial JSON round trip is bit exact") {
  for (auto [p, n] : {std::pair{2u, 5u}, std::pair{3u, 3u}, std::pair{7u, 2u}, std::pair{5u, 0u}}) {
    const auto f = random_polynomial(PrimeModulus(p), n);
    const auto text = dump(to_json(f));
    const auto g = polynomial_from_json(json::parse(text));
    CHECK(g == f);
    CHECK(dump(to_json(g)) == text);
  }
}

TEST_CASE("truth table JSON round trip") {
  const auto t = random_table(PrimeModulus(3), 3);
  CHECK(truth_table_from_json(json::parse(dump(to_json(t)))) == t);
}

TEST_CASE("cost report JSON") {
  const auto j = to_json(CostReport{3, 4, 1, 2});
  CHECK(j["mul_count"] == 3);
  CHECK(j["add_count"] == 4);
  CHECK(j["scale_count"] == 1);
  CHECK(j["mul_depth"] == 2);
}

TEST_CASE("malformed documents are format errors") {
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"p":3,"n":1})")), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"p":4,"n":1,"coeffs":[0,0,0,0]})")), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"p":3,"n":1,"coeffs":[0,0]})")), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"p":3,"n":1,"coeffs":[0,0,3]})")), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"p":3,"n":1,"coeffs":[0,-1,0]})")), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"p":3,"n":"1","coeffs":[0,0,0]})")), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse("[1,2,3]")), FormatError);
  CHECK_THROWS_AS(truth_table_from_json(json::parse(R"({"p":2,"arity":1,"values":[0]})")), FormatError);
  CHECK_THROWS_AS(circuit_from_json(json::parse(
                      R"({"p":2,"inputs":1,"gates":[{"op":"mul","args":[0,1]}],"output":0})")),
                  FormatError);
  CHECK_THROWS_AS(circuit_from_json(json::parse(
                      R"({"p":2,"inputs":1,"gates":[{"op":"nand","args":[]}],"output":0})")),
                  FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"p":2,"n":40,"coeffs":[]})")),
                  SizeLimitExceeded);
}

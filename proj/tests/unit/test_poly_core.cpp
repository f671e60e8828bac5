#include <doctest.h>

#include "bk/polynomial.hpp"
#include "support.hpp"

using namespace bk;
using bk::testing::random_poly;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
Polynomial P(const char* s) { return parse_polynomial(s, xyz); }
}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(6) / 4) == "3/2");
  CHECK(to_string(Rational(-4) / 2) == "-2");
  CHECK(parse_rational("-10/4") == Rational(-5) / 2);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK(factorial(7) == 5040);
  CHECK(binomial(6, 2) == 15);
  CHECK(reduce_mod_one(Rational(3) / 2, -1, true) == Rational(-1) / 2);
  CHECK(reduce_mod_one(Rational(0), -1, true) == 0);
  CHECK(reduce_mod_one(Rational(0), -1, false) == -1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 1000; ++it) {
    const Polynomial a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3), c = random_poly(rng, 3, 3, 2);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a * Polynomial::constant(3, 1) == a);
  }
}

TEST_CASE("Leibniz rule for partial derivatives") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 300; ++it) {
    const Polynomial a = random_poly(rng, 3, 4, 4), b = random_poly(rng, 3, 4, 4);
    for (std::size_t v = 0; v < 3; ++v)
      REQUIRE(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
  }
}

TEST_CASE("terms are sorted by descending grlex") {
  const Polynomial p = P("z + x^2 + y*z + 3 + x*y");
  for (std::size_t k = 1; k < p.terms().size(); ++k)
    CHECK(grlex_compare(p.terms()[k - 1].monomial, p.terms()[k].monomial) > 0);
  CHECK(to_string(p, xyz) == "x^2 + x*y + y*z + z + 3");
}

TEST_CASE("parse and print round trip") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const Polynomial p = random_poly(rng, 3, 5, 4);
    REQUIRE(P(to_string(p, xyz).c_str()) == p);
  }
  CHECK(P("(x+y)^2 - 2*x*y") == P("x^2 + y^2"));
  CHECK(P("-x + 1/2*y") == P("1/2*y - x"));
  CHECK(P("x^5/5") == P("1/5*x^5"));
  CHECK(P("  x ^ 2 ") == P("x^2"));
  CHECK(P("0").is_zero());
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("w"), ParseError);
  CHECK_THROWS_AS(P("x / y"), ParseError);
  CHECK_THROWS_AS(P("x / 0"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  try {
    P("x + * y");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("weighted degree") {
  WeightVector w{{1, 1, -1}};
  CHECK(*weighted_degree(P("x^5 + y^5 + x^3*y^3*z"), w) == 5);
  CHECK_FALSE(weighted_degree(P("x + y^2"), w).has_value());
  WeightVector cusp{{3, 2, 1}};
  CHECK(*weighted_degree(P("x^2 + y^3"), cusp) == 6);
}

TEST_CASE("embedding and powers") {
  const Polynomial p = parse_polynomial("x^2 + 1", std::vector<std::string>{"x"});
  const Polynomial e = p.embed(3, 2);
  CHECK(e == P("z^2 + 1"));
  CHECK(P("x + y").pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(P("x").pow(0) == P("1"));
}

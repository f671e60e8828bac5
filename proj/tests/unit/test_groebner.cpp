#include <doctest.h>

#include "bk/groebner.hpp"
#include "support.hpp"

using namespace bk;
using bk::testing::random_poly;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};
Polynomial P(const char* s) { return parse_polynomial(s, xyz); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Monomial lf = leading_monomial(f, ord), lg = leading_monomial(g, ord);
  const Monomial l = Monomial::lcm(lf, lg);
  const Rational cf = f.coefficient(lf), cg = g.coefficient(lg);
  return f.mul_term(l / lf, 1 / cf) - g.mul_term(l / lg, 1 / cg);
}

}  // namespace

TEST_CASE("Buchberger criterion holds on computed bases") {
  std::mt19937_64 rng(11);
  for (const auto& ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    for (int it = 0; it < 15; ++it) {
      std::vector<Polynomial> gens{random_poly(rng, 3, 3, 2), random_poly(rng, 3, 3, 2), random_poly(rng, 3, 2, 2)};
      const auto gb = groebner_basis(gens, ord);
      for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j)
          REQUIRE(normal_form(s_polynomial(gb[i], gb[j], ord), gb, ord).is_zero());
      // generators reduce to zero
      for (const auto& g : gens) REQUIRE(normal_form(g, gb, ord).is_zero());
    }
  }
}

TEST_CASE("ideal membership of random combinations") {
  std::mt19937_64 rng(12);
  const std::vector<Polynomial> I{P("x^2 + y*z"), P("y^3 - x"), P("x*z^2 + y")};
  for (int it = 0; it < 200; ++it) {
    Polynomial m = Polynomial(3);
    for (const auto& g : I) m += g * random_poly(rng, 3, 2, 2);
    REQUIRE(ideal_contains(I, m));
  }
  CHECK_FALSE(ideal_contains(std::vector<Polynomial>{P("x^2"), P("y^2")}, P("x*y")));
}

TEST_CASE("quotient dimensions give Milnor numbers") {
  // jacobian ideals: x^2+y^3 (2), x^3+y^3 (4), x^4+y^3 (6)
  const std::vector<std::string> xy{"x", "y"};
  auto Q = [&](const char* s) { return parse_polynomial(s, xy); };
  CHECK(quotient_dimension(std::vector<Polynomial>{Q("2*x"), Q("3*y^2")}) == 2u);
  CHECK(quotient_dimension(std::vector<Polynomial>{Q("3*x^2"), Q("3*y^2")}) == 4u);
  CHECK(quotient_dimension(std::vector<Polynomial>{Q("4*x^3"), Q("3*y^2")}) == 6u);
  // z is free in Q[x,y,z]
  CHECK_FALSE(quotient_dimension(std::vector<Polynomial>{P("x"), P("y")}).has_value());
  CHECK_FALSE(quotient_dimension(std::vector<Polynomial>{P("x*y")}).has_value());
}

TEST_CASE("intersection and radical") {
  const auto J = ideal_intersect(std::vector<Polynomial>{P("x")}, std::vector<Polynomial>{P("y")});
  CHECK(ideal_contains(J, P("x*y")));
  CHECK_FALSE(ideal_contains(J, P("x")));
  CHECK(radical_contains(std::vector<Polynomial>{P("x^3")}, P("x")));
  CHECK_FALSE(radical_contains(std::vector<Polynomial>{P("x^3")}, P("y")));
}

TEST_CASE("module kernels and equality") {
  // kernel of (x, y): the Koszul syzygy (y, -x)
  const PolyMatrix m{{P("x"), P("y")}};
  const SubmoduleOfFree k = module_kernel(m, 2);
  const SubmoduleOfFree koszul{2, {{P("y"), P("-x")}}};
  CHECK(modules_equal(k, koszul));
  CHECK(module_contains(k, {P("y*z"), P("-x*z")}));
  CHECK_FALSE(module_contains(k, {P("1"), P("0")}));
  const SubmoduleOfFree bigger{2, {{P("y"), P("-x")}, {P("1"), P("0")}}};
  CHECK_FALSE(modules_equal(k, bigger));
}

TEST_CASE("basis cache") {
  clear_groebner_cache();
  groebner_basis(std::vector<Polynomial>{P("x^2 - y"), P("y^2 - z")});
  CHECK(groebner_cache_size() >= 1u);
  CHECK(clear_groebner_cache() >= 1u);
  CHECK(groebner_cache_size() == 0u);
}

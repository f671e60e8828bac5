#include <doctest.h>

#include "bk/errors.hpp"
#include "bk/thom_sebastiani.hpp"

using namespace bk;

namespace {

GermPtr germ(const char* name, std::vector<std::string> vars, std::vector<std::string> w, const char* f) {
  return std::make_shared<GermProblem>(make_germ(name, std::move(vars), w, f));
}

CohomologyClass dvar(const GermPtr& g) {
  return CohomologyClass(g, DifferentialForm::volume(Polynomial::constant(g->nvars(), 1)));
}

}  // namespace

TEST_CASE("join") {
  const auto h = join(*germ("f", {"x"}, {"1"}, "x^2"), *germ("g", {"y"}, {"1"}, "y^3"));
  CHECK(h.degree() == 1);
  CHECK(h.weights().weights == std::vector<Rational>{Rational(1) / 2, Rational(1) / 3});
  CHECK(h.variables() == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(join(*germ("f", {"x"}, {"1"}, "x^2"), *germ("g", {"x"}, {"1"}, "x^3")), InputError);
}

TEST_CASE("external products and exponent additivity") {
  const auto f = germ("f", {"x"}, {"1"}, "x^2"), g = germ("g", {"y"}, {"1"}, "y^3");
  const auto p = external_product(dvar(f), dvar(g));
  CHECK(p.representative() == DifferentialForm::volume(Polynomial::constant(2, 1)));
  CHECK(p.exponent() == dvar(f).exponent() + dvar(g).exponent() + 1);
  CHECK(p.exponent() == Rational(-1) / 6);
  const auto q = external_product(dvar(f), dvar(germ("g", {"y"}, {"1"}, "y^2")));
  CHECK(q.exponent() == 0);
}

TEST_CASE("t acts as t (x) 1 + 1 (x) t on representatives") {
  const auto f = germ("f", {"x", "y"}, {"1", "1"}, "x^3 + y^3"), g = germ("g", {"z"}, {"1"}, "z^2");
  const auto h = join(*f, *g);
  const auto om = DifferentialForm::volume(parse_polynomial("x*y", f->variables())).embed(3, 0);
  const auto et = DifferentialForm::volume(parse_polynomial("z", g->variables())).embed(3, 2);
  const Polynomial fh = f->f().embed(3, 0), gh = g->f().embed(3, 2);
  CHECK(wedge(om, et) * h.f() == wedge(om * fh, et) + wedge(om, et * gh));
}

TEST_CASE("omega ^ g^k dg is exact in A_h") {
  const auto f = germ("f", {"x"}, {"1"}, "x^2"), g = germ("g", {"y"}, {"1"}, "y^2");
  const auto h = join(*f, *g);
  const Polynomial gh = g->f().embed(2, 1);
  for (int k = 0; k <= 3; ++k) {
    const auto eta = vanish_g_k_dg(dvar(f), *g, k);
    REQUIRE(eta.has_value());
    CHECK(df_wedge(h.f(), *eta).is_zero());
    CHECK(exterior_derivative(*eta) ==
          wedge(dvar(f).representative().embed(2, 0), differential(gh) * gh.pow(static_cast<unsigned>(k))));
  }
  // hand computation for k = 0: eta = 2x(x dx + y dy) up to A_h-closed terms
  const auto smooth = germ("g", {"y"}, {"1"}, "y");
  CHECK(vanish_g_k_dg(dvar(f), *smooth, 0).has_value());
  CHECK_THROWS_AS(vanish_g_k_dg(dvar(f), *g, -1), InputError);
}

TEST_CASE("rank and exponent comparison") {
  struct Case {
    GermPtr f, g;
    std::size_t rank;
    std::vector<Rational> exponents;
  };
  const std::vector<Case> cases{
      {germ("f", {"x"}, {"1"}, "x^2"), germ("g", {"y"}, {"1"}, "y^2"), 1, {0}},
      {germ("f", {"x"}, {"1"}, "x^2"), germ("g", {"y"}, {"1"}, "y^3"), 2, {Rational(-1) / 6, Rational(1) / 6}},
  };
  for (const auto& c : cases) {
    const auto r = ts_compare(*c.f, *c.g);
    CHECK(r.holds());
    CHECK(r.left.rank == c.rank);
    CHECK(r.right.exponents == c.exponents);
    CHECK(r.slices_compared > 0u);
  }
  CHECK_THROWS_AS(ts_compare(*germ("f", {"x", "y"}, {"1", "1"}, "x*y^2"), *germ("g", {"z"}, {"1"}, "z^2")), NonIsolated);
}

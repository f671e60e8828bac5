// Acceptance run: one PASS/FAIL line per criterion. Exit status counts the
// failures that were not listed with --expect-fail.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "bk/brieskorn.hpp"
#include "bk/errors.hpp"
#include "bk/microdiff.hpp"
#include "bk/nc_log.hpp"
#include "bk/problem_file.hpp"
#include "bk/thom_sebastiani.hpp"

using namespace bk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

GermPtr germ(const char* name, std::vector<std::string> vars, std::vector<std::string> w, const char* f) {
  return std::make_shared<GermProblem>(make_germ(name, std::move(vars), w, f));
}

GermPtr barlet() {
  return std::make_shared<GermProblem>(load_problem(std::string(BK_PROBLEMS_DIR) + "/barlet35.json").germ());
}

std::vector<GermPtr> isolated_corpus() {
  return {germ("x2+y2", {"x", "y"}, {"1", "1"}, "x^2 + y^2"), germ("x2+y3", {"x", "y"}, {"3", "2"}, "x^2 + y^3"),
          germ("x3+y3", {"x", "y"}, {"1", "1"}, "x^3 + y^3"), germ("x4+y3", {"x", "y"}, {"3", "4"}, "x^4 + y^3"),
          germ("x2+y2+z2", {"x", "y", "z"}, {"1", "1", "1"}, "x^2 + y^2 + z^2")};
}

bool found(const TorsionResult& r) { return std::holds_alternative<TorsionCertificate>(r); }

DifferentialForm vol(const GermProblem& g, const Polynomial& c) {
  (void)g;
  return DifferentialForm::volume(c);
}

Polynomial monomial(std::size_t n, std::vector<int> e) { return Polynomial::term(Monomial(std::move(e)), 1); }

// ---------------------------------------------------------------------------

Outcome kernel_module() {
  const auto g = barlet();
  const auto& v = g->variables();
  auto P = [&](const char* s) { return parse_polynomial(s, v); };
  auto form = [&](std::initializer_list<std::pair<Wedge, const char*>> parts) {
    DifferentialForm w(3, 2);
    for (const auto& [wedge, c] : parts) w.add(wedge, P(c));
    return w;
  };
  constexpr Wedge dxdy = 0b011, dxdz = 0b101, dydz = 0b110;
  const std::vector<DifferentialForm> displayed{
      form({{dydz, "x*y^3"}, {dxdy, "-3*(x^2 + y^3*z)"}}),
      form({{dxdz, "x^3*y"}, {dxdy, "3*(y^2 + x^3*z)"}}),
      form({{dydz, "x^2*y^2*z"}, {dxdz, "x^3"}, {dxdy, "3*(y - x*y^2*z^2)"}}),
      form({{dxdz, "x^2*y^2*z"}, {dydz, "y^3"}, {dxdy, "-3*(x - x^2*y*z^2)"}}),
  };
  SubmoduleOfFree ref{3, {}};
  for (const auto& w : displayed) {
    if (!df_wedge(g->f(), w).is_zero()) return {false, "a displayed generator is not killed by df^"};
    ref.generators.push_back(form_to_vector(w));
  }
  const SubmoduleOfFree computed = kernel_forms(*g, 2);
  const bool eq = modules_equal(computed, ref);
  return {eq, std::to_string(computed.generators.size()) + " computed generators, mutual membership " +
                  (eq ? "holds" : "fails")};
}

Outcome barlet_torsion() {
  const auto g = barlet();
  const std::vector<Polynomial> xy{monomial(3, {1, 0, 0}), monomial(3, {0, 1, 0})};
  for (const auto& w : kernel_form_generators(*g, 2)) {
    const Polynomial c = exterior_derivative(w).coefficient(0b111);
    if (!ideal_contains(xy, c)) return {false, "d of a generator leaves (x, y)"};
  }
  for (int cap : {12, 16, 20}) {
    for (int k = 0; k < 10; ++k) {
      const CohomologyClass c(g, vol(*g, monomial(3, {0, 0, k})));
      // distinct weights 1 - k: independence is nonvanishing in each slice
      if (h_slice(*g, 3, c.weight(), {cap}).is_zero_class(c.representative()))
        return {false, "z^" + std::to_string(k) + " vol vanishes at cap " + std::to_string(cap)};
    }
  }
  std::ostringstream d;
  for (int k = 0; k < 3; ++k) {
    const CohomologyClass c(g, vol(*g, monomial(3, {0, 0, k})));
    const auto r = torsion_order_t(c, 10, {12});
    if (!found(r)) return {false, "no t-certificate for z^" + std::to_string(k) + " vol within p <= 10"};
    const auto& cert = std::get<TorsionCertificate>(r);
    if (!verify_certificate(*g, c.representative(), cert)) return {false, "certificate does not verify"};
    d << "z^" << k << " vol: p=" << cert.order << "; ";
  }
  d << "z^k vol independent for k<10 at caps 12,16,20";
  return {true, d.str()};
}

Outcome normal_crossings() {
  std::size_t germs = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> m(static_cast<std::size_t>(n), 1);
    for (;;) {
      const auto g = MonomialGerm::make(m);
      const int e = std::accumulate(m.begin(), m.end(), 0, [](int a, int b) { return std::gcd(a, b); });
      for (int p = 0; p < n; ++p) {
        const Integer expect = Integer(e) * binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(p));
        if (Integer(static_cast<unsigned long>(log_relative_basis(g, p).size())) != expect)
          return {false, "basis size mismatch"};
      }
      const auto ev = residue_eigenvalues(g, 0);
      for (std::size_t k = 1; k < ev.size(); ++k)
        if (ev[k] == ev[k - 1]) return {false, "repeated degree-0 eigenvalue"};
      ++germs;
      std::size_t i = 0;
      while (i < m.size() && m[i] == 6) m[i++] = 1;
      if (i == m.size()) break;
      ++m[i];
    }
  }
  return {true, std::to_string(germs) + " monomial germs"};
}

Outcome isolated_rank() {
  std::ostringstream d;
  for (const auto& g : isolated_corpus()) {
    const int n = static_cast<int>(g->nvars());
    const auto mu = milnor_number(*g);
    if (!mu) return {false, g->name() + " reported non-isolated"};
    const auto s = t_module_structure(*g, n, generator_weight_bound(*g) + 2 * g->degree());
    if (s.generators.size() != *mu || !s.t_injective)
      return {false, g->name() + ": rank " + std::to_string(s.generators.size()) + " vs mu " + std::to_string(*mu)};
    for (const auto& gen : s.generators) {
      const CohomologyClass c(g, gen.representative);
      if (found(torsion_order_t(c, 4)) || found(torsion_order_s(c, 4)))
        return {false, g->name() + ": torsion found on a generator"};
      const CohomologyClass tc = t_action(c);
      if (found(torsion_order_t(tc, 3)) || found(torsion_order_s(tc, 3)))
        return {false, g->name() + ": torsion found on t * generator"};
    }
    d << g->name() << " mu=" << *mu << "; ";
  }
  return {true, d.str()};
}

Outcome torsion_equivalence() {
  std::mt19937_64 rng(20240520);
  int agree = 0, total = 0;
  std::ostringstream bad;
  auto sample = [&](const GermPtr& g, int count, int emax, std::optional<int> cap) {
    std::set<std::vector<int>> seen;
    std::uniform_int_distribution<int> e(0, emax);
    while (static_cast<int>(seen.size()) < count) {
      std::vector<int> ex(g->nvars());
      for (auto& x : ex) x = e(rng);
      if (!seen.insert(ex).second) continue;
      const CohomologyClass c(g, vol(*g, monomial(g->nvars(), ex)));
      const bool t = found(torsion_order_t(c, 4, {cap}));
      const bool s = found(torsion_order_s(c, 6, {cap}));
      ++total;
      if (t == s) {
        ++agree;
      } else {
        bad << " " << g->name() << ":" << to_string(c.representative(), g->variables()) << " (weight "
            << to_string(c.weight()) << ", t " << (t ? "found" : "none") << ", s " << (s ? "found" : "none") << ")";
      }
    }
  };
  sample(barlet(), 20, 3, 12);
  const auto iso = isolated_corpus();
  for (std::size_t k = 0; k < iso.size(); ++k) sample(iso[k], 4, 3, std::nullopt);
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree" +
                              (agree == total ? "" : "; disagreements:" + bad.str())};
}

Outcome operator_identities() {
  const auto t = SkewElement::t_power(1);
  for (int j = 1; j <= 20; ++j) {
    const auto sj = SkewElement::s_power(j);
    if (!(t * sj - sj * t == SkewElement::s_power(j + 1) * Rational(j))) return {false, "[t, s^j] fails"};
  }
  for (int n = 2; n <= 8; ++n)
    for (int p = 1; p < n; ++p) {
      const auto c = st_expansion_certificate(p, n - p);
      if (c.pure_coefficient != Rational(factorial(static_cast<unsigned long>(n - 1))) || !c.others_carry_t)
        return {false, "pure coefficient wrong at p=" + std::to_string(p)};
    }
  for (int p = 1; p <= 5; ++p) {
    const auto l = s_power_decomposition(p);
    if (!l) return {false, "no solution at p=" + std::to_string(p)};
    SkewElement sum;
    for (int j = 0; j <= p; ++j)
      sum += SkewElement::s_power(j) * SkewElement::t_power(p) * SkewElement::s_power(p - j) * (*l)[static_cast<std::size_t>(j)];
    if (!(sum == SkewElement::s_power(2 * p))) return {false, "solution does not reproduce s^2p"};
  }
  TruncatedSeries u = TruncatedSeries::constant(1, 50);
  for (int k = 1; k <= 50; ++k) {
    u = integrate_series(u).series;
    for (int j = 0; j <= 50; ++j)
      if (u.coefficient(j) != (j == k ? 1 / Rational(factorial(static_cast<unsigned long>(k))) : Rational(0)))
        return {false, "integration wrong at k=" + std::to_string(k)};
  }
  return {true, "j<=20, p+q<=8, p<=5, k<=50"};
}

Outcome eigenvalue_laws() {
  std::size_t classes = 0, contractions = 0;
  std::mt19937_64 rng(7);
  for (const auto& g : isolated_corpus()) {
    const int n = static_cast<int>(g->nvars());
    const Rational top = generator_weight_bound(*g) + g->degree();
    for (const auto& c : achievable_weights(g->weights(), n, top, std::nullopt)) {
      const HSlice h = h_slice(*g, n, c);
      const HSlice up = h_slice(*g, n, c + g->degree());
      for (const auto& rep : h.basis_forms()) {
        const CohomologyClass w(g, rep);
        const Rational alpha = c / g->degree() - 1;
        if (!up.is_zero_class(s_action(w).representative() - t_action(w).representative() * (g->degree() / c)))
          return {false, g->name() + ": s != (d/c) t"};
        if (!h.is_zero_class(tdt_action(w).representative() - rep * alpha)) return {false, g->name() + ": tdt eigenvalue"};
        ++classes;
      }
    }
    for (const auto& gen : t_module_structure(*g, n, generator_weight_bound(*g)).generators)
      if (!(gen.exponent > -1 && gen.exponent < n - 1)) return {false, g->name() + ": exponent outside (-1, n-1)"};
  }
  std::vector<GermPtr> all = isolated_corpus();
  all.push_back(barlet());
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (const auto& g : all) {
    const int n = static_cast<int>(g->nvars());
    const int deg = n - 1;
    const auto gens = kernel_form_generators(*g, deg);
    const VectorField xi = g->normalized_euler();
    for (int it = 0; it < 100; ++it) {
      DifferentialForm w(g->nvars(), deg);
      for (const auto& k : gens) {
        Polynomial m = Polynomial::constant(g->nvars(), coeff(rng));
        m = m * Polynomial::variable(g->nvars(), rng() % g->nvars()) + Polynomial::constant(g->nvars(), coeff(rng));
        w += k * m;
      }
      if (!(df_wedge(g->f(), interior_product(xi, w)) == w * g->f())) return {false, g->name() + ": contraction"};
      ++contractions;
    }
  }
  return {true, std::to_string(classes) + " eigenclasses, " + std::to_string(contractions) + " contractions"};
}

Outcome thom_sebastiani() {
  std::ostringstream d;
  const std::array<std::pair<GermPtr, GermPtr>, 3> pairs{
      std::pair{germ("x2", {"x"}, {"1"}, "x^2"), germ("y2", {"y"}, {"1"}, "y^2")},
      std::pair{germ("x2", {"x"}, {"1"}, "x^2"), germ("y3", {"y"}, {"1"}, "y^3")},
      std::pair{germ("x3+y3", {"x", "y"}, {"1", "1"}, "x^3 + y^3"), germ("z2", {"z"}, {"1"}, "z^2")}};
  for (const auto& [f, g] : pairs) {
    const TsReport r = ts_compare(*f, *g);
    if (!r.ranks_equal() || !r.exponents_equal())
      return {false, f->name() + "+" + g->name() + ": ranks " + std::to_string(r.left.rank) + "/" +
                         std::to_string(r.right.rank)};
    d << f->name() << "+" << g->name() << " rank " << r.right.rank << "; ";
  }
  const auto f = germ("x2", {"x"}, {"1"}, "x^2"), g = germ("y2", {"y"}, {"1"}, "y^2");
  const CohomologyClass dx(f, DifferentialForm::volume(Polynomial::constant(1, 1)));
  const GermProblem h = join(*f, *g);
  const Polynomial gh = g->f().embed(2, 1);
  for (int k = 0; k <= 3; ++k) {
    const auto eta = vanish_g_k_dg(dx, *g, k);
    if (!eta) return {false, "no certificate for k=" + std::to_string(k)};
    const DifferentialForm target = wedge(dx.representative().embed(2, 0), differential(gh) * gh.pow(static_cast<unsigned>(k)));
    if (!(exterior_derivative(*eta) == target) || !df_wedge(h.f(), *eta).is_zero())
      return {false, "certificate for k=" + std::to_string(k) + " does not verify"};
  }
  d << "certificates k<=3";
  return {true, d.str()};
}

Outcome pullback() {
  const auto f = germ("x2+y3", {"x", "y"}, {"3", "2"}, "x^2 + y^3");
  const GermProblem h = f->with_inert_variable("z", 1);
  std::size_t slices = 0;
  const Rational top = 40;
  for (const auto& c : achievable_weights(h.weights(), 2, top, std::nullopt)) {
    const std::size_t a = h_slice(*f, 2, c).dimension(), b = h_slice(h, 2, c).dimension();
    if (a != b) return {false, "weight " + to_string(c) + ": " + std::to_string(a) + " vs " + std::to_string(b)};
    ++slices;
  }
  for (const auto& c : achievable_weights(h.weights(), 3, top, std::nullopt))
    if (h_slice(h, 3, c).dimension() != 0) return {false, "H^3 of the pullback is nonzero at " + to_string(c)};
  return {true, std::to_string(slices) + " slices of H^2 equal, H^3 vanishes"};
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string("\"") + BK_CLI + "\" " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  for (const char* file : {"barlet35.json", "cusp.json"}) {
    const std::string args = std::string("analyze \"") + BK_PROBLEMS_DIR + "/" + file + "\"";
    int s1 = 0, s2 = 0;
    const std::string a = run_cli(args, s1), b = run_cli(args, s2);
    if (s1 != 0 || s2 != 0) return {false, std::string(file) + ": nonzero exit"};
    if (a.empty() || a != b) return {false, std::string(file) + ": outputs differ"};
  }
  return {true, "barlet35 and cusp reports byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only, expect_fail;
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--expect-fail", expect_fail, "criteria whose failure does not count");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"kernel of df^ on barlet35 equals the displayed module", kernel_module},
      {"barlet35: d(A^2) in (x,y), z^k vol independent, t-certificates", barlet_torsion},
      {"normal crossing log ranks and distinct eigenvalues", normal_crossings},
      {"isolated germs: free rank equals mu, no torsion", isolated_rank},
      {"t-torsion found iff s-torsion found on sampled classes", torsion_equivalence},
      {"microdifferential operator identities", operator_identities},
      {"eigenvalue laws and contraction identity", eigenvalue_laws},
      {"external products: ranks, exponents, vanishing certificates", thom_sebastiani},
      {"inert variable leaves H^n slices unchanged", pullback},
      {"repeated analyze runs are byte-identical", determinism},
  };
  int counted = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool expected = std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
    std::printf("[%s] %2d %s (%.1fs): %s%s\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first.c_str(), secs,
                o.detail.c_str(), !o.pass && expected ? " [expected]" : "");
    std::fflush(stdout);
    if (!o.pass && !expected) ++counted;
  }
  return counted;
}

#include "bk/nc_log.hpp"

#include <algorithm>
#include <numeric>

#include "bk/errors.hpp"
#include "bk/linalg.hpp"
#include "bk/slices.hpp"

namespace bk {

MonomialGerm MonomialGerm::make(std::vector<int> exponents) {
  if (exponents.empty()) throw InputError("monomial germ needs at least one variable");
  if (exponents.size() > 16) throw InputError("too many variables");
  MonomialGerm g;
  int e = 0;
  for (int m : exponents) {
    if (m < 1) throw InputError("monomial exponents must be >= 1");
    e = std::gcd(e, m);
  }
  g.m = std::move(exponents);
  g.e = e;
  for (int m : g.m) g.mu.push_back(m / e);
  return g;
}

Polynomial MonomialGerm::f() const { return Polynomial::term(Monomial(m), 1); }

GermProblem MonomialGerm::problem() const {
  std::vector<std::string> vars;
  WeightVector w;
  const long n = static_cast<long>(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    vars.push_back("x" + std::to_string(i + 1));
    w.weights.push_back(Rational(1) / (n * m[i]));
  }
  return GermProblem("monomial", vars, w, f());
}

DifferentialForm LogForm::times_g() const {
  const std::size_t n = eta.nvars();
  DifferentialForm out(n, eta.degree());
  for (const auto& [w, c] : eta.coefficients()) {
    // g eta_I = (prod_{j not in I} x_j) dx_I
    std::vector<int> e(n, 1);
    for (int i : wedge_indices(w)) e[static_cast<std::size_t>(i)] = 0;
    out.add(w, c.mul_term(Monomial(e), 1));
  }
  return out;
}

std::vector<LogForm> log_relative_basis(const MonomialGerm& germ, int p) {
  const std::size_t n = germ.nvars();
  if (p < 0 || static_cast<std::size_t>(p) > n - 1) throw InputError("log basis degree must lie in [0, n-1]");
  std::vector<Wedge> subsets;
  const Wedge limit = Wedge{1} << n;
  for (Wedge w = 0; w < limit; w += 2)  // bit 0 (x_1) excluded
    if (wedge_degree(w) == p) subsets.push_back(w);
  std::sort(subsets.begin(), subsets.end(), WedgeLess{});
  std::vector<LogForm> out;
  for (int k = 0; k < germ.e; ++k) {
    std::vector<int> ex(n);
    for (std::size_t i = 0; i < n; ++i) ex[i] = k * germ.mu[i];
    for (Wedge w : subsets)
      out.push_back(LogForm{DifferentialForm::basis(n, w, Polynomial::term(Monomial(ex), 1))});
  }
  return out;
}

LogForm log_lie_derivative(const MonomialGerm& germ, const LogForm& omega) {
  const std::size_t n = germ.nvars();
  VectorField xi;
  xi.components.assign(n, Polynomial(n));
  xi.components[0] = Polynomial::variable(n, 0) * (Rational(1) / germ.m[0]);
  LogForm out{DifferentialForm(n, omega.degree())};
  for (const auto& [w, c] : omega.eta.coefficients()) out.eta.add(w, xi.apply(c));
  return out;
}

std::vector<Rational> residue_eigenvalues(const MonomialGerm& germ, int p) {
  std::vector<Rational> out;
  for (const auto& b : log_relative_basis(germ, p)) {
    const LogForm l = log_lie_derivative(germ, b);
    // basis elements are single terms, so the eigenvalue is a coefficient ratio
    const auto& [w, c] = *b.eta.coefficients().begin();
    const Polynomial lc = l.eta.coefficient(w);
    const Rational lambda = lc.is_zero() ? Rational(0) : lc.terms().front().coeff / c.terms().front().coeff;
    if (!(l.eta == b.eta * lambda)) throw InvariantViolation("log basis element is not an L_xi eigenvector");
    out.push_back(lambda);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NcCheck verify_a_equals_g_atilde(const MonomialGerm& germ, int degree, int degree_bound) {
  const std::size_t n = germ.nvars();
  if (degree < 0 || static_cast<std::size_t>(degree) > n) throw InputError("form degree out of range");
  NcCheck out;
  const Polynomial f = germ.f();
  std::vector<Wedge> wedges;
  for (Wedge w = 0; w < (Wedge{1} << n); ++w)
    if (wedge_degree(w) == degree) wedges.push_back(w);
  std::sort(wedges.begin(), wedges.end(), WedgeLess{});

  // constants c in Lambda^i with (sum m_j dx_j) ^ c = 0
  DifferentialForm mform(n, 1);
  for (std::size_t j = 0; j < n; ++j) mform.add(Wedge{1} << j, Polynomial::constant(n, germ.m[j]));
  std::vector<SparseVec> mcols;
  std::map<Wedge, int> target_index;
  for (Wedge w : wedges) {
    std::map<int, Rational> col;
    const DifferentialForm img = wedge(mform, DifferentialForm::basis(n, w, Polynomial::constant(n, 1)));
    for (const auto& [tw, c] : img.coefficients()) {
      auto [it, ins] = target_index.try_emplace(tw, static_cast<int>(target_index.size()));
      col[it->second] += c.constant_term();
    }
    mcols.push_back(SparseVec::from_map(col));
  }
  const std::vector<SparseVec> log_kernel = kernel_of_columns(mcols);

  std::vector<int> beta(n, 0);
  auto visit = [&]() {
    ++out.slices_checked;
    // A side: forms x^{beta - 1_I} dx_I killed by df ^
    std::vector<DifferentialForm> cand;
    for (Wedge w : wedges) {
      std::vector<int> a = beta;
      bool ok = true;
      for (int i : wedge_indices(w))
        if (--a[static_cast<std::size_t>(i)] < 0) ok = false;
      if (ok) cand.push_back(DifferentialForm::basis(n, w, Polynomial::term(Monomial(a), 1)));
    }
    DynamicIndexer idx;
    std::vector<SparseVec> cols;
    for (const auto& c : cand) cols.push_back(idx.coordinates(0, df_wedge(f, c)));
    std::vector<DifferentialForm> a_side;
    for (const auto& k : kernel_of_columns(cols)) {
      DifferentialForm e(n, degree);
      for (const auto& [j, x] : k.entries()) e += cand[static_cast<std::size_t>(j)] * x;
      a_side.push_back(std::move(e));
    }
    out.kernel_dimension += a_side.size();

    // log side: g x^{beta - 1} c_I eta_I, only when beta >= 1 componentwise
    std::vector<DifferentialForm> log_side;
    if (std::all_of(beta.begin(), beta.end(), [](int b) { return b >= 1; })) {
      std::vector<int> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = beta[i] - 1;
      for (const auto& k : log_kernel) {
        LogForm l{DifferentialForm(n, degree)};
        for (const auto& [j, x] : k.entries())
          l.eta.add(wedges[static_cast<std::size_t>(j)], Polynomial::term(Monomial(a), x));
        log_side.push_back(l.times_g());
      }
    }

    for (const auto& l : log_side)
      if (!df_wedge(f, l).is_zero()) {
        out.holds = false;
        out.witness = l;
        return;
      }
    EchelonBasis a_span, l_span;
    for (std::size_t k = 0; k < a_side.size(); ++k) a_span.insert(idx.coordinates(1, a_side[k]), static_cast<int>(k));
    for (std::size_t k = 0; k < log_side.size(); ++k) l_span.insert(idx.coordinates(1, log_side[k]), static_cast<int>(k));
    for (const auto& a : a_side)
      if (!l_span.contains(idx.coordinates(1, a))) {
        out.holds = false;
        out.witness = a;
        return;
      }
    for (const auto& l : log_side)
      if (!a_span.contains(idx.coordinates(1, l))) {
        out.holds = false;
        out.witness = l;
        return;
      }
  };
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (!out.holds) return;
    if (var == n) {
      visit();
      return;
    }
    for (int b = 0; b <= left; ++b) {
      beta[var] = b;
      self(self, var + 1, left - b);
    }
    beta[var] = 0;
  };
  rec(rec, 0, degree_bound);
  return out;
}

}  // namespace bk

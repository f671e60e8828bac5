#include "bk/thom_sebastiani.hpp"

#include <algorithm>
#include <set>

#include "bk/errors.hpp"

namespace bk {

namespace {

GermProblem normalized(const GermProblem& p) {
  WeightVector w;
  for (const auto& x : p.weights().weights) w.weights.push_back(x / p.degree());
  return GermProblem(p.name(), p.variables(), w, p.f());
}

}  // namespace

GermProblem join(const GermProblem& f, const GermProblem& g) {
  std::set<std::string> seen(f.variables().begin(), f.variables().end());
  for (const auto& v : g.variables())
    if (seen.count(v)) throw InputError("variable " + v + " occurs in both germs");
  const std::size_t nf = f.nvars(), n = nf + g.nvars();
  std::vector<std::string> vars = f.variables();
  vars.insert(vars.end(), g.variables().begin(), g.variables().end());
  WeightVector w;
  for (const auto& x : f.weights().weights) w.weights.push_back(x / f.degree());
  for (const auto& x : g.weights().weights) w.weights.push_back(x / g.degree());
  return GermProblem(f.name() + "+" + g.name(), vars, w, f.f().embed(n, 0) + g.f().embed(n, nf));
}

CohomologyClass external_product(const CohomologyClass& omega, const CohomologyClass& eta) {
  const auto& f = *omega.problem();
  const auto& g = *eta.problem();
  auto h = std::make_shared<GermProblem>(join(f, g));
  const std::size_t n = h->nvars();
  return CohomologyClass(h, wedge(omega.representative().embed(n, 0), eta.representative().embed(n, f.nvars())));
}

std::optional<DifferentialForm> vanish_g_k_dg(const CohomologyClass& omega, const GermProblem& g, int k,
                                              SliceOptions opts) {
  if (k < 0) throw InputError("k must be nonnegative");
  const auto& f = *omega.problem();
  const GermProblem h = join(f, g);
  const std::size_t n = h.nvars();
  const Polynomial gh = g.f().embed(n, f.nvars());
  const DifferentialForm target =
      wedge(omega.representative().embed(n, 0), differential(gh) * gh.pow(static_cast<unsigned>(k)));
  if (target.is_zero()) return DifferentialForm(n, target.degree() - 1);
  const auto c = weighted_degree(target, h.weights());
  if (!c) throw InvariantViolation("product form is not homogeneous");
  SliceOptions o = opts;
  if (!h.all_weights_positive()) {
    if (!o.max_degree) throw CapExceeded("nonpositive weights require --max-degree");
    o.max_degree = std::max(*o.max_degree, target.total_degree());
  }
  KernelSlice a = kernel_slice(h, target.degree() - 1, *c, o, false);
  DynamicIndexer idx;
  std::vector<SparseVec> cols;
  for (const auto& v : a.kernel) cols.push_back(idx.coordinates(0, exterior_derivative(a.space.form(v))));
  auto x = solve_columns(cols, idx.coordinates(0, target));
  if (!x) return std::nullopt;
  DifferentialForm eta(n, target.degree() - 1);
  for (const auto& [j, v] : x->entries()) eta += a.space.form(a.kernel[static_cast<std::size_t>(j)]) * v;
  return eta;
}

TModuleStructure top_structure(const GermProblem& problem) {
  const int n = static_cast<int>(problem.nvars());
  return t_module_structure(problem, n, generator_weight_bound(problem), {}, n == 1);
}

TsReport ts_compare(const GermProblem& f, const GermProblem& g) {
  if (!milnor_number(f)) throw NonIsolated("the first germ must have an isolated singularity");
  if (!f.all_weights_positive() || !g.all_weights_positive())
    throw InputError("external products are compared for positive weights only");
  const GermProblem fn = normalized(f), gn = normalized(g), h = join(f, g);
  const TModuleStructure sf = top_structure(fn);
  const TModuleStructure sg = top_structure(gn);
  const TModuleStructure sh = top_structure(h);

  TsReport r;
  for (const auto& a : sf.generators)
    for (const auto& b : sg.generators) r.left.exponents.push_back(a.exponent + b.exponent + 1);
  r.left.rank = r.left.exponents.size();
  for (const auto& a : sh.generators) r.right.exponents.push_back(a.exponent);
  r.right.rank = r.right.exponents.size();
  std::sort(r.left.exponents.begin(), r.left.exponents.end());
  std::sort(r.right.exponents.begin(), r.right.exponents.end());

  // slice dimensions: dim H_h,c = sum over f-generators v of dim H~_g,(c - c_v)
  const int nh = static_cast<int>(h.nvars());
  const int ng = static_cast<int>(gn.nvars());
  Rational top = 0;
  for (const auto& a : sh.generators) top = std::max(top, a.weight);
  top += 2;
  for (const Rational& c : achievable_weights(h.weights(), nh, top, std::nullopt)) {
    const std::size_t lhs = h_slice(h, nh, c).dimension();
    std::size_t rhs = 0;
    for (const auto& v : sf.generators) {
      const Rational cg = c - v.weight;
      if (cg <= 0) continue;
      rhs += h_slice(gn, ng, cg, {}, ng == 1).dimension();
    }
    ++r.slices_compared;
    if (lhs != rhs) r.slice_mismatches.push_back(c);
  }
  return r;
}

}  // namespace bk

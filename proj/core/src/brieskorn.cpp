#include "bk/brieskorn.hpp"

#include <algorithm>
#include <set>

#include "bk/errors.hpp"

namespace bk {

namespace {

int max_total_degree(const Polynomial& f) { return f.total_degree(); }

// Cap for slices of forms derived from `omega`: the user cap, but never
// below what is needed to contain omega itself.
std::optional<int> effective_cap(const GermProblem& problem, SliceOptions opts, int needed) {
  if (problem.all_weights_positive()) return opts.max_degree;
  if (!opts.max_degree) throw CapExceeded("nonpositive weights require --max-degree");
  return std::max(*opts.max_degree, needed);
}

}  // namespace

CohomologyClass::CohomologyClass(GermPtr problem, DifferentialForm representative)
    : problem_(std::move(problem)), rep_(std::move(representative)), weight_(0) {
  const auto& p = *problem_;
  if (rep_.nvars() != p.nvars()) throw InputError("representative lives in a ring of the wrong size");
  if (rep_.degree() < 0 || static_cast<std::size_t>(rep_.degree()) > p.nvars())
    throw InputError("form degree out of range");
  if (!df_wedge(p.f(), rep_).is_zero()) throw InputError("representative is not killed by df^");
  if (static_cast<std::size_t>(rep_.degree()) < p.nvars() && !exterior_derivative(rep_).is_zero())
    throw InputError("representative is not closed");
  if (!rep_.is_zero()) {
    auto c = weighted_degree(rep_, p.weights());
    if (!c) throw InputError("representative is not weighted-homogeneous");
    weight_ = *c;
  }
}

Rational CohomologyClass::exponent() const { return weight_ / problem_->degree() - 1; }

std::vector<Wedge> wedge_basis(std::size_t nvars, int degree) {
  std::vector<Wedge> out;
  if (degree < 0 || static_cast<std::size_t>(degree) > nvars) return out;
  const Wedge limit = Wedge{1} << nvars;
  for (Wedge m = 0; m < limit; ++m)
    if (wedge_degree(m) == degree) out.push_back(m);
  std::sort(out.begin(), out.end(), WedgeLess{});
  return out;
}

PolyVector form_to_vector(const DifferentialForm& omega) {
  PolyVector v;
  for (Wedge w : wedge_basis(omega.nvars(), omega.degree())) v.push_back(omega.coefficient(w));
  return v;
}

DifferentialForm vector_to_form(std::size_t nvars, int degree, const PolyVector& v) {
  const auto basis = wedge_basis(nvars, degree);
  if (basis.size() != v.size()) throw std::invalid_argument("vector length does not match wedge basis");
  DifferentialForm out(nvars, degree);
  for (std::size_t k = 0; k < v.size(); ++k) out.add(basis[k], v[k]);
  return out;
}

PolyMatrix df_wedge_matrix(const GermProblem& problem, int degree) {
  const std::size_t n = problem.nvars();
  const auto cols = wedge_basis(n, degree);
  const auto rows = wedge_basis(n, degree + 1);
  std::vector<Polynomial> partials;
  for (std::size_t j = 0; j < n; ++j) partials.push_back(partial_derivative(problem.f(), j));
  PolyMatrix m(rows.size(), std::vector<Polynomial>(cols.size(), Polynomial(n)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Wedge extra = rows[r] & ~cols[c];
      if ((cols[c] & ~rows[r]) != 0 || wedge_degree(extra) != 1) continue;
      const int j = wedge_indices(extra).front();
      const int s = wedge_sign(extra, cols[c]);
      m[r][c] = s > 0 ? partials[static_cast<std::size_t>(j)] : -partials[static_cast<std::size_t>(j)];
    }
  return m;
}

SubmoduleOfFree kernel_forms(const GermProblem& problem, int degree) {
  const std::size_t n = problem.nvars();
  const auto cols = wedge_basis(n, degree);
  if (static_cast<std::size_t>(degree) == n) {
    SubmoduleOfFree all{cols.size(), {}};
    for (std::size_t k = 0; k < cols.size(); ++k) {
      PolyVector e(cols.size(), Polynomial(n));
      e[k] = Polynomial::constant(n, 1);
      all.generators.push_back(std::move(e));
    }
    return all;
  }
  return module_kernel(df_wedge_matrix(problem, degree), cols.size());
}

std::vector<DifferentialForm> kernel_form_generators(const GermProblem& problem, int degree) {
  std::vector<DifferentialForm> out;
  for (const auto& v : kernel_forms(problem, degree).generators)
    out.push_back(vector_to_form(problem.nvars(), degree, v));
  return out;
}

KernelSlice kernel_slice(const GermProblem& problem, int degree, const Rational& weight, SliceOptions opts,
                         bool closed_only) {
  KernelSlice ks{FormSlice::enumerate(problem.weights(), degree, weight, opts.max_degree), {}};
  const bool top = static_cast<std::size_t>(degree) == problem.nvars();
  const DifferentialForm df = differential(problem.f());
  DynamicIndexer idx;
  std::vector<SparseVec> columns;
  columns.reserve(ks.space.size());
  for (std::size_t k = 0; k < ks.space.size(); ++k) {
    const DifferentialForm b = ks.space.basis_form(k);
    SparseVec col;
    if (!top) {
      col = idx.coordinates(0, wedge(df, b));
      if (closed_only) col += idx.coordinates(1, exterior_derivative(b));
    }
    columns.push_back(std::move(col));
  }
  ks.kernel = kernel_of_columns(columns);
  return ks;
}

std::vector<DifferentialForm> HSlice::basis_forms() const {
  std::vector<DifferentialForm> out;
  for (const auto& v : basis_) out.push_back(space_.form(v));
  return out;
}

SparseVec HSlice::class_coordinates(const DifferentialForm& omega) const {
  auto coords = space_.coordinates(omega);
  if (!coords) throw InvariantViolation("form does not lie in this weight slice");
  auto red = quotient_.reduce(*coords);
  if (!red.remainder.is_zero()) throw InvariantViolation("form is not a cycle of this slice");
  std::map<int, Rational> out;
  for (const auto& [id, x] : red.combination.entries())
    if (id >= h_offset_) out[h_index_.at(id)] += x;
  return SparseVec::from_map(out);
}

bool HSlice::is_zero_class(const DifferentialForm& omega) const { return class_coordinates(omega).is_zero(); }

std::optional<DifferentialForm> HSlice::antiderivative(const DifferentialForm& omega) const {
  auto coords = space_.coordinates(omega);
  if (!coords) return std::nullopt;
  auto red = quotient_.reduce(*coords);
  if (!red.remainder.is_zero()) return std::nullopt;
  DifferentialForm eta(space_.nvars(), degree() - 1);
  for (const auto& [id, x] : red.combination.entries()) {
    if (id >= h_offset_) return std::nullopt;
    eta += boundary_sources_.at(static_cast<std::size_t>(id)) * x;
  }
  return eta;
}

HSlice h_slice(const GermProblem& problem, int degree, const Rational& weight, SliceOptions opts, bool reduced) {
  HSlice h;
  KernelSlice cycles = kernel_slice(problem, degree, weight, opts, true);
  h.space_ = std::move(cycles.space);
  h.cycle_dim_ = cycles.kernel.size();

  int next_id = 0;
  if (degree >= 1) {
    KernelSlice prev = kernel_slice(problem, degree - 1, weight, opts, false);
    for (const auto& a : prev.kernel) {
      DifferentialForm eta = prev.space.form(a);
      auto b = h.space_.coordinates(exterior_derivative(eta));
      if (!b) throw InvariantViolation("d left the weight slice");
      h.quotient_.insert(*b, next_id++);
      h.boundary_sources_.push_back(std::move(eta));
    }
  }
  if (reduced && degree == 1) {
    // also divide out the classes f^k df = d(f^{k+1}/(k+1))
    const Rational k = weight / problem.degree() - 1;
    if (is_integer(k) && k >= 0) {
      const auto kk = static_cast<unsigned>(k.get_num().get_ui());
      const Polynomial fk = problem.f().pow(kk);
      auto b = h.space_.coordinates(differential(problem.f()) * fk);
      if (b) {
        h.quotient_.insert(*b, next_id++);
        h.boundary_sources_.push_back(DifferentialForm::function(fk * problem.f() * (Rational(1) / (k + 1))));
      }
    }
  }
  h.boundary_rank_ = h.quotient_.rank();
  h.h_offset_ = next_id;
  for (std::size_t j = 0; j < cycles.kernel.size(); ++j) {
    const int id = h.h_offset_ + static_cast<int>(j);
    if (!h.quotient_.insert(cycles.kernel[j], id)) {
      h.h_index_[id] = static_cast<int>(h.basis_.size());
      h.basis_.push_back(cycles.kernel[j]);
    }
  }
  return h;
}

CohomologyClass t_action(const CohomologyClass& omega) {
  return CohomologyClass(omega.problem(), omega.representative() * omega.problem()->f());
}

DifferentialForm euler_antiderivative(const CohomologyClass& omega) {
  const auto& p = *omega.problem();
  if (omega.weight() == 0) throw DegenerateWeight("s-action needs a class of nonzero weight");
  DifferentialForm eta = interior_product(p.euler(), omega.representative()) * (1 / omega.weight());
  if (omega.degree() == 1) {
    const Polynomial g = eta.coefficient(0);
    const Polynomial normalized = g - Polynomial::constant(p.nvars(), g.constant_term());
    const Polynomial fs[] = {p.f()};
    if (!normalized.is_zero() && !radical_contains(fs, normalized))
      throw InvariantViolation("antiderivative does not vanish on f = 0");
    eta = DifferentialForm::function(normalized);
  }
  return eta;
}

CohomologyClass s_action(const CohomologyClass& omega) {
  const DifferentialForm eta = euler_antiderivative(omega);
  return CohomologyClass(omega.problem(), df_wedge(omega.problem()->f(), eta));
}

CohomologyClass tdt_action(const CohomologyClass& omega) {
  const auto& rep = omega.representative();
  return CohomologyClass(omega.problem(), lie_derivative(omega.problem()->normalized_euler(), rep) - rep);
}

std::optional<std::size_t> milnor_number(const GermProblem& problem) {
  std::vector<Polynomial> partials;
  for (std::size_t j = 0; j < problem.nvars(); ++j) partials.push_back(partial_derivative(problem.f(), j));
  return quotient_dimension(partials);
}

ThetaResult theta_f(const GermProblem& problem, int degree_bound) {
  const std::size_t n = problem.nvars();
  PolyMatrix row(1);
  for (std::size_t j = 0; j < n; ++j) row[0].push_back(partial_derivative(problem.f(), j));
  const SubmoduleOfFree ker = module_kernel(row, n);
  ThetaResult out;
  std::vector<SparseVec> values;
  for (const auto& g : ker.generators) {
    std::map<int, Rational> at0;
    int deg = -1;
    for (std::size_t j = 0; j < n; ++j) {
      at0[static_cast<int>(j)] = g[j].constant_term();
      deg = std::max(deg, g[j].total_degree());
    }
    values.push_back(SparseVec::from_map(at0));
    if (deg <= degree_bound) out.fields.push_back(VectorField{g});
  }
  out.delta0 = rank_of(values);
  return out;
}

std::size_t delta_at_origin(const GermProblem& problem) { return theta_f(problem, 0).delta0; }

PPrimeResult check_p_prime(const GermProblem& problem, int degree, int degree_bound) {
  if (degree < 2) throw InputError("condition (P') is stated for degree >= 2");
  PPrimeResult out;
  const bool positive = problem.all_weights_positive();
  out.cap_relative = !positive;
  const std::optional<int> cap = degree_bound;
  const std::optional<int> rhs_cap = degree_bound + max_total_degree(problem.f());
  const DifferentialForm df = differential(problem.f());
  const Rational& d = problem.degree();

  for (const Rational& c : achievable_weights(problem.weights(), degree, std::nullopt, cap)) {
    DynamicIndexer idx;
    // d(A^{i-1}_c)
    KernelSlice a = kernel_slice(problem, degree - 1, c, {cap}, false);
    std::vector<SparseVec> u;
    std::vector<DifferentialForm> u_forms;
    for (const auto& v : a.kernel) {
      u_forms.push_back(exterior_derivative(a.space.form(v)));
      u.push_back(idx.coordinates(0, u_forms.back()));
    }
    // df ^ Omega^{i-1}_{c-d}
    FormSlice w_space = FormSlice::enumerate(problem.weights(), degree - 1, c - d, cap);
    std::vector<SparseVec> w;
    for (std::size_t k = 0; k < w_space.size(); ++k) w.push_back(idx.coordinates(0, wedge(df, w_space.basis_form(k))));
    ++out.slices_checked;
    if (u.empty() || w.empty()) continue;

    std::vector<SparseVec> cols = u;
    for (const auto& x : w) {
      SparseVec neg = x;
      neg *= Rational(-1);
      cols.push_back(std::move(neg));
    }
    std::vector<DifferentialForm> lhs;
    for (const auto& k : kernel_of_columns(cols)) {
      DifferentialForm e(problem.nvars(), degree);
      for (const auto& [j, x] : k.entries())
        if (static_cast<std::size_t>(j) < u.size()) e += u_forms[static_cast<std::size_t>(j)] * x;
      if (!e.is_zero()) lhs.push_back(std::move(e));
    }
    if (lhs.empty()) continue;

    // df ^ d Omega^{i-2}_{c-d}
    EchelonBasis rhs;
    FormSlice r_space = FormSlice::enumerate(problem.weights(), degree - 2, c - d, positive ? cap : rhs_cap);
    for (std::size_t k = 0; k < r_space.size(); ++k)
      rhs.insert(idx.coordinates(0, wedge(df, exterior_derivative(r_space.basis_form(k)))), static_cast<int>(k));
    for (const auto& e : lhs)
      if (!rhs.contains(idx.coordinates(0, e))) {
        out.holds = false;
        out.witness = e;
        return out;
      }
  }
  return out;
}

Rational generator_weight_bound(const GermProblem& problem) {
  Rational sum = 0;
  for (const auto& w : problem.weights().weights) sum += w;
  const Rational n = static_cast<long>(problem.nvars());
  const Rational bound = n * problem.degree() - sum;
  return std::max(bound, problem.degree());
}

TModuleStructure t_module_structure(const GermProblem& problem, int degree, const Rational& max_weight,
                                    SliceOptions opts, bool reduced) {
  TModuleStructure out;
  out.max_weight = max_weight;
  out.cap_relative = !problem.all_weights_positive();
  const Rational& d = problem.degree();
  const auto weights = achievable_weights(problem.weights(), degree,
                                          std::optional<Rational>(max_weight), effective_cap(problem, opts, 0));
  std::map<Rational, HSlice> slices;
  for (const Rational& c : weights) {
    if (c > max_weight) continue;
    HSlice h = h_slice(problem, degree, c, opts, reduced);
    out.slice_dimensions.emplace_back(c, h.dimension());
    EchelonBasis image;
    int id = 0;
    if (auto prev = slices.find(c - d); prev != slices.end()) {
      for (const auto& b : prev->second.basis_forms()) {
        const DifferentialForm tb = b * problem.f();
        if (!h.space().coordinates(tb)) continue;  // left the capped slice
        if (image.insert(h.class_coordinates(tb), id++)) out.t_injective = false;
      }
    }
    const auto forms = h.basis_forms();
    for (std::size_t k = 0; k < forms.size(); ++k)
      if (!image.insert(SparseVec::unit(static_cast<int>(k)), id++))
        out.generators.push_back(TGenerator{c, c / d - 1, forms[k]});
    slices.emplace(c, std::move(h));
  }
  return out;
}

}  // namespace bk

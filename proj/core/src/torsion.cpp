#include <algorithm>

#include "bk/brieskorn.hpp"
#include "bk/errors.hpp"

namespace bk {

namespace {

std::optional<int> slice_cap(const GermProblem& problem, SliceOptions opts, int needed) {
  if (problem.all_weights_positive()) return std::nullopt;
  if (!opts.max_degree) throw CapExceeded("nonpositive weights require --max-degree");
  return std::max(*opts.max_degree, needed);
}

}  // namespace

TorsionResult torsion_order_t(const CohomologyClass& omega, int p_max, SliceOptions opts) {
  const auto& problem = *omega.problem();
  if (p_max < 1) throw InputError("p_max must be positive");
  if (omega.degree() == 0) {
    // A^{-1} = 0: only the zero function is a boundary, and f^p g = 0 forces g = 0
    if (omega.representative().is_zero()) return TorsionCertificate{TorsionCertificate::Kind::T, 1, {}};
    return NotFoundWithin{p_max};
  }
  DifferentialForm target = omega.representative();
  for (int p = 1; p <= p_max; ++p) {
    target = target * problem.f();
    const Rational c = omega.weight() + problem.degree() * p;
    const auto cap = slice_cap(problem, opts, target.total_degree());
    KernelSlice prev = kernel_slice(problem, omega.degree() - 1, c, {cap}, false);
    DynamicIndexer idx;
    std::vector<SparseVec> cols;
    for (const auto& a : prev.kernel) cols.push_back(idx.coordinates(0, exterior_derivative(prev.space.form(a))));
    auto x = solve_columns(cols, idx.coordinates(0, target));
    if (!x) continue;
    DifferentialForm eta(problem.nvars(), omega.degree() - 1);
    for (const auto& [j, v] : x->entries()) eta += prev.space.form(prev.kernel[static_cast<std::size_t>(j)]) * v;
    return TorsionCertificate{TorsionCertificate::Kind::T, p, {eta}};
  }
  return NotFoundWithin{p_max};
}

TorsionResult torsion_order_s(const CohomologyClass& omega, int r_max, SliceOptions opts) {
  const auto& problem = *omega.problem();
  if (r_max < 1) throw InputError("r_max must be positive");
  const int i = omega.degree();
  if (i == 0) {
    if (omega.representative().is_zero()) return TorsionCertificate{TorsionCertificate::Kind::S, 1, {}};
    return NotFoundWithin{r_max};
  }
  const DifferentialForm df = differential(problem.f());
  const int fdeg = problem.f().total_degree();
  const int base = omega.representative().total_degree();

  // order r + 1 uses unknowns eta_0..eta_r, eta_j of weight c + j d
  for (int r = 0; r + 1 <= r_max; ++r) {
    std::vector<FormSlice> blocks;
    for (int j = 0; j <= r; ++j) {
      const auto cap = slice_cap(problem, opts, base + j * fdeg);
      std::optional<int> block_cap;
      if (cap) block_cap = *cap + j * fdeg;
      blocks.push_back(FormSlice::enumerate(problem.weights(), i - 1, omega.weight() + problem.degree() * j, block_cap));
    }
    DynamicIndexer idx;
    std::vector<SparseVec> cols;
    std::vector<std::pair<int, std::size_t>> origin;
    for (int j = 0; j <= r; ++j)
      for (std::size_t k = 0; k < blocks[static_cast<std::size_t>(j)].size(); ++k) {
        const DifferentialForm b = blocks[static_cast<std::size_t>(j)].basis_form(k);
        // equation j: d eta_j - df ^ eta_{j-1} = (j == 0 ? omega : 0); equation r + 1: df ^ eta_r = 0
        SparseVec col = idx.coordinates(j, exterior_derivative(b));
        SparseVec next = idx.coordinates(j + 1, wedge(df, b));
        if (j < r) next *= Rational(-1);
        col += next;
        cols.push_back(std::move(col));
        origin.emplace_back(j, k);
      }
    auto x = solve_columns(cols, idx.coordinates(0, omega.representative()));
    if (!x) continue;
    std::vector<DifferentialForm> chain(static_cast<std::size_t>(r + 1), DifferentialForm(problem.nvars(), i - 1));
    for (const auto& [col, v] : x->entries()) {
      const auto [j, k] = origin[static_cast<std::size_t>(col)];
      chain[static_cast<std::size_t>(j)] += blocks[static_cast<std::size_t>(j)].basis_form(k) * v;
    }
    return TorsionCertificate{TorsionCertificate::Kind::S, r + 1, std::move(chain)};
  }
  return NotFoundWithin{r_max};
}

bool verify_certificate(const GermProblem& problem, const DifferentialForm& omega, const TorsionCertificate& cert) {
  if (cert.order < 1) return false;
  const std::size_t n = problem.nvars();
  if (omega.degree() == 0) return omega.is_zero() && cert.witness.empty();
  for (const auto& w : cert.witness)
    if (w.nvars() != n || w.degree() != omega.degree() - 1) return false;
  if (cert.kind == TorsionCertificate::Kind::T) {
    if (cert.witness.size() != 1) return false;
    const auto& eta = cert.witness[0];
    if (!df_wedge(problem.f(), eta).is_zero()) return false;
    return exterior_derivative(eta) == omega * problem.f().pow(static_cast<unsigned>(cert.order));
  }
  if (cert.witness.size() != static_cast<std::size_t>(cert.order)) return false;
  const auto& chain = cert.witness;
  if (!(exterior_derivative(chain[0]) == omega)) return false;
  for (std::size_t j = 0; j + 1 < chain.size(); ++j)
    if (!(exterior_derivative(chain[j + 1]) == df_wedge(problem.f(), chain[j]))) return false;
  return df_wedge(problem.f(), chain.back()).is_zero();
}

}  // namespace bk

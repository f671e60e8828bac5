#pragma once

#include <optional>
#include <vector>

#include "bk/forms.hpp"
#include "bk/germ.hpp"

namespace bk {

/// f = prod x_i^{m_i} with every variable occurring.
struct MonomialGerm {
  std::vector<int> m;
  int e = 1;            // gcd of the m_i
  std::vector<int> mu;  // m_i / e

  static MonomialGerm make(std::vector<int> exponents);
  std::size_t nvars() const { return m.size(); }
  Polynomial f() const;
  /// Germ with weights 1/(n m_i), so that f has degree 1.
  GermProblem problem() const;
};

/// Combination of eta_I = dx_I / x_I; the wedge keys index eta_I, not dx_I,
/// so nothing with poles is ever stored.
struct LogForm {
  DifferentialForm eta;

  int degree() const { return eta.degree(); }
  /// g * (this) as a polynomial form, g = prod x_i.
  DifferentialForm times_g() const;
};

/// x^{k mu} eta_I for 0 <= k < e and I ⊆ {2..n} with |I| = p.
std::vector<LogForm> log_relative_basis(const MonomialGerm& germ, int p);

/// L_xi on log forms, xi = x_1 d_1 / m_1; it acts on coefficients only
/// since L_xi eta_i = d(xi(x_i)/x_i) = 0.
LogForm log_lie_derivative(const MonomialGerm& germ, const LogForm& omega);

/// Sorted eigenvalues of L_xi on log_relative_basis(germ, p).
std::vector<Rational> residue_eigenvalues(const MonomialGerm& germ, int p);

/// Multidegree-by-multidegree comparison of A^i_f with g * Ker(f^{-1} df ^)
/// on log forms, over multidegrees of total size <= degree_bound.
struct NcCheck {
  bool holds = true;
  std::optional<DifferentialForm> witness;
  std::size_t slices_checked = 0;
  std::size_t kernel_dimension = 0;  // summed over the checked slices
};
NcCheck verify_a_equals_g_atilde(const MonomialGerm& germ, int degree, int degree_bound);

}  // namespace bk

#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "bk/germ.hpp"
#include "bk/groebner.hpp"
#include "bk/linalg.hpp"
#include "bk/slices.hpp"

namespace bk {

/// Bounds shared by all slice computations. `max_degree` caps |a| + |I| of
/// every form x^a dx_I considered; it is only consulted when some weight is
/// nonpositive, in which case every answer is flagged cap-relative.
struct SliceOptions {
  std::optional<int> max_degree;
};

/// Element of H^i_f given by a w-homogeneous representative with
/// df ^ rep = 0 (and d rep = 0 below top degree).
class CohomologyClass {
 public:
  /// Validates the representative; throws InputError when it is not a cycle
  /// of A_f or not homogeneous.
  CohomologyClass(GermPtr problem, DifferentialForm representative);

  const GermPtr& problem() const { return problem_; }
  int degree() const { return rep_.degree(); }
  const DifferentialForm& representative() const { return rep_; }
  /// Weighted degree c of the representative (0 for the zero form).
  const Rational& weight() const { return weight_; }
  /// c/d - 1, the t d_t eigenvalue of a homogeneous class.
  Rational exponent() const;

 private:
  GermPtr problem_;
  DifferentialForm rep_;
  Rational weight_;
};

// ---- A_f^i = Ker(df ^) as a module ---------------------------------------

/// Coefficient vector of an i-form in the wedge basis (WedgeLess order).
PolyVector form_to_vector(const DifferentialForm& omega);
DifferentialForm vector_to_form(std::size_t nvars, int degree, const PolyVector& v);
/// Wedge basis of Omega^i in the order used by form_to_vector.
std::vector<Wedge> wedge_basis(std::size_t nvars, int degree);

/// The df ^ matrix from Omega^i to Omega^{i+1} in wedge bases.
PolyMatrix df_wedge_matrix(const GermProblem& problem, int degree);

/// Module generators of A_f^i via a syzygy computation.
SubmoduleOfFree kernel_forms(const GermProblem& problem, int degree);
std::vector<DifferentialForm> kernel_form_generators(const GermProblem& problem, int degree);

// ---- weight slices of H_f^i -----------------------------------------------

/// Finite linear model of the weight-c slice of H^i_f:
/// (Ker d ∩ A^i_c) / d(A^{i-1}_c), optionally also modulo C[t] df when
/// `reduced` and i = 1.
class HSlice {
 public:
  int degree() const { return space_.degree(); }
  const Rational& weight() const { return space_.weight(); }
  bool cap_relative() const { return space_.truncated(); }
  const FormSlice& space() const { return space_; }

  std::size_t dimension() const { return basis_.size(); }
  /// Representatives of a basis of the slice.
  std::vector<DifferentialForm> basis_forms() const;
  std::size_t cycle_dimension() const { return cycle_dim_; }
  std::size_t boundary_rank() const { return boundary_rank_; }

  /// Coordinates in the slice basis of a cycle of this weight. Throws
  /// InvariantViolation when the form is not a cycle in this slice.
  SparseVec class_coordinates(const DifferentialForm& omega) const;
  bool is_zero_class(const DifferentialForm& omega) const;

  /// Writes a boundary as d(eta) with eta in A^{i-1}; nullopt when the form
  /// is not a boundary inside the slice.
  std::optional<DifferentialForm> antiderivative(const DifferentialForm& omega) const;

 private:
  friend HSlice h_slice(const GermProblem&, int, const Rational&, SliceOptions, bool);

  FormSlice space_;
  std::vector<SparseVec> basis_;
  std::vector<DifferentialForm> boundary_sources_;  // eta_k with d eta_k = boundary generator k
  EchelonBasis quotient_;
  int h_offset_ = 0;
  std::map<int, int> h_index_;  // generator id -> basis position
  std::size_t cycle_dim_ = 0;
  std::size_t boundary_rank_ = 0;
};

HSlice h_slice(const GermProblem& problem, int degree, const Rational& weight, SliceOptions opts = {},
               bool reduced = false);

/// Basis of A^i_c (in slice coordinates) together with its slice.
struct KernelSlice {
  FormSlice space;
  std::vector<SparseVec> kernel;
};
KernelSlice kernel_slice(const GermProblem& problem, int degree, const Rational& weight, SliceOptions opts,
                         bool closed_only);

// ---- connection actions ---------------------------------------------------

CohomologyClass t_action(const CohomologyClass& omega);
/// d_t^{-1}: df ^ eta with eta = i_E omega / c. For i = 1, eta is also
/// checked to vanish on f = 0. Throws DegenerateWeight when c = 0.
CohomologyClass s_action(const CohomologyClass& omega);
/// L_xi omega - omega with xi = E/d.
CohomologyClass tdt_action(const CohomologyClass& omega);

/// The antiderivative eta = i_E omega / c used by s_action.
DifferentialForm euler_antiderivative(const CohomologyClass& omega);

// ---- torsion --------------------------------------------------------------

struct TorsionCertificate {
  enum class Kind { T, S };
  Kind kind;
  /// t-kind: f^order * omega = d(witness[0]), witness[0] in A^{i-1}.
  /// s-kind: order = r + 1, witness = eta_0..eta_r with d eta_0 = omega,
  /// df ^ eta_j = d eta_{j+1}, df ^ eta_r = 0.
  int order;
  std::vector<DifferentialForm> witness;
};

struct NotFoundWithin {
  int bound;
};

using TorsionResult = std::variant<TorsionCertificate, NotFoundWithin>;

TorsionResult torsion_order_t(const CohomologyClass& omega, int p_max, SliceOptions opts = {});
TorsionResult torsion_order_s(const CohomologyClass& omega, int r_max, SliceOptions opts = {});

/// Re-checks the defining equations of a certificate exactly.
bool verify_certificate(const GermProblem& problem, const DifferentialForm& omega, const TorsionCertificate& cert);

// ---- invariants of f ------------------------------------------------------

/// dim Q[x]/(df), or nullopt (non-isolated).
std::optional<std::size_t> milnor_number(const GermProblem& problem);

/// Generators of Theta_f = {xi : xi f = 0} with component degree <= bound,
/// and delta at the origin (rank of the values at 0 of all generators).
struct ThetaResult {
  std::vector<VectorField> fields;
  std::size_t delta0 = 0;
};
ThetaResult theta_f(const GermProblem& problem, int degree_bound);
std::size_t delta_at_origin(const GermProblem& problem);

/// Degreewise check of d(Ker df^) ∩ Im df^ = Im df^d in Omega^i over all
/// slices with |a| + |I| <= degree_bound.
struct PPrimeResult {
  bool holds = true;
  std::optional<DifferentialForm> witness;
  std::size_t slices_checked = 0;
  bool cap_relative = false;
};
PPrimeResult check_p_prime(const GermProblem& problem, int degree, int degree_bound);

// ---- C{t}-module structure from slices -------------------------------------

struct TGenerator {
  Rational weight;
  Rational exponent;  // weight/d - 1
  DifferentialForm representative;
};

/// Minimal C{t}-generators of H^i (or reduced H^1) with weight <= max_weight:
/// at each weight, classes not in t * (previous slice). Also records whether t
/// acted injectively on every computed slice.
struct TModuleStructure {
  std::vector<TGenerator> generators;
  std::vector<std::pair<Rational, std::size_t>> slice_dimensions;
  bool t_injective = true;
  bool cap_relative = false;
  Rational max_weight;
};
TModuleStructure t_module_structure(const GermProblem& problem, int degree, const Rational& max_weight,
                                    SliceOptions opts = {}, bool reduced = false);

/// Upper bound on the weights of C{t}-generators of H^n for an isolated
/// quasi-homogeneous germ with positive weights: n d - sum w_i.
Rational generator_weight_bound(const GermProblem& problem);

}  // namespace bk

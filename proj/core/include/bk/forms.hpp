#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bk/polynomial.hpp"

namespace bk {

/// Set of wedge factors dx_i as a bitmask (bit i <-> dx_i); the
/// corresponding basis form is dx_{i1} ^ ... ^ dx_{ip} with i1 < ... < ip.
using Wedge = std::uint32_t;

inline int wedge_degree(Wedge w) { return __builtin_popcount(w); }
std::vector<int> wedge_indices(Wedge w);
Wedge wedge_of(std::span<const int> indices);

/// Orders equal-degree wedges by their increasing index tuples.
struct WedgeLess {
  bool operator()(Wedge a, Wedge b) const;
};

/// Sign of dx_A ^ dx_B rewritten as +-dx_{A∪B}; 0 when A and B overlap.
int wedge_sign(Wedge a, Wedge b);

/// Polynomial i-form: sum over wedges I (|I| = i) of a_I dx_I.
class DifferentialForm {
 public:
  using Coefficients = std::map<Wedge, Polynomial, WedgeLess>;

  DifferentialForm(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {}

  static DifferentialForm function(const Polynomial& p);
  static DifferentialForm basis(std::size_t nvars, Wedge w, const Polynomial& coeff);
  /// dx_0 ^ ... ^ dx_{n-1} scaled by coeff.
  static DifferentialForm volume(const Polynomial& coeff);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  Polynomial coefficient(Wedge w) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * dx_w (w must have the form degree).
  void add(Wedge w, const Polynomial& c);

  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  DifferentialForm operator+(const DifferentialForm& o) const;
  DifferentialForm operator-(const DifferentialForm& o) const;
  DifferentialForm operator-() const;
  DifferentialForm operator*(const Polynomial& p) const;
  DifferentialForm operator*(const Rational& c) const;

  /// Largest |a| + |I| over the terms x^a dx_I; -1 for the zero form.
  int total_degree() const;

  /// Re-embeds into a ring of `nvars` variables at index offset.
  DifferentialForm embed(std::size_t nvars, std::size_t offset) const;

  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

 private:
  std::size_t nvars_;
  int degree_;
  Coefficients coeffs_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// One polynomial component per variable.
struct VectorField {
  std::vector<Polynomial> components;

  std::size_t nvars() const { return components.size(); }
  /// xi(g) = sum_i xi_i * dg/dx_i
  Polynomial apply(const Polynomial& g) const;
  VectorField operator*(const Rational& c) const;
  bool vanishes_at_origin() const;
};

/// E = sum_i w_i x_i d/dx_i
VectorField euler_field(const WeightVector& w);

DifferentialForm exterior_derivative(const DifferentialForm& omega);
/// df as a 1-form.
DifferentialForm differential(const Polynomial& f);
DifferentialForm df_wedge(const Polynomial& f, const DifferentialForm& omega);
/// Contraction; the zero form of degree -1 is returned for functions.
DifferentialForm interior_product(const VectorField& xi, const DifferentialForm& omega);
/// Cartan: L_xi = d i_xi + i_xi d.
DifferentialForm lie_derivative(const VectorField& xi, const DifferentialForm& omega);

/// Weighted degree with dx_i counted as w_i; nullopt for inhomogeneous or
/// zero forms.
std::optional<Rational> weighted_degree(const DifferentialForm& omega, const WeightVector& w);

/// "coeff*monomial dx_i^dx_j + ..." using the variable names.
std::string to_string(const DifferentialForm& omega, std::span<const std::string> vars);

/// Canonically ordered (coefficient, exponents, wedge tuple) triples.
struct FormTerm {
  Rational coeff;
  std::vector<int> exponents;
  std::vector<int> wedge;
};
std::vector<FormTerm> serialize_terms(const DifferentialForm& omega);
DifferentialForm deserialize_terms(std::size_t nvars, int degree, std::span<const FormTerm> terms);

}  // namespace bk

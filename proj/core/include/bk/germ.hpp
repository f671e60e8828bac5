#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bk/forms.hpp"
#include "bk/polynomial.hpp"

namespace bk {

enum class Isolation { Unknown, Isolated, NonIsolated };

/// A quasi-homogeneous polynomial germ at the origin: f is w-homogeneous of
/// nonzero degree d. Construction validates both.
class GermProblem {
 public:
  GermProblem(std::string name, std::vector<std::string> variables, WeightVector weights, Polynomial f);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const WeightVector& weights() const { return weights_; }
  const Polynomial& f() const { return f_; }
  /// Quasi-homogeneity degree d of f.
  const Rational& degree() const { return degree_; }
  bool all_weights_positive() const;

  Isolation isolation() const { return isolation_; }
  void set_isolation(Isolation i) { isolation_ = i; }

  /// E = sum w_i x_i d_i, so E f = d f.
  VectorField euler() const { return euler_field(weights_); }
  /// xi = E / d, so xi f = f.
  VectorField normalized_euler() const { return euler() * (1 / degree_); }

  /// Same germ with one extra variable (weight `w`, named `name`) that f
  /// does not involve.
  GermProblem with_inert_variable(const std::string& name, const Rational& w) const;

 private:
  std::string name_;
  std::vector<std::string> variables_;
  WeightVector weights_;
  Polynomial f_;
  Rational degree_;
  Isolation isolation_ = Isolation::Unknown;
};

using GermPtr = std::shared_ptr<const GermProblem>;

/// Parses the polynomial and builds the problem (throws InputError).
GermProblem make_germ(std::string name, std::vector<std::string> variables,
                      const std::vector<std::string>& weights, const std::string& polynomial);

}  // namespace bk

#include "bk/germ.hpp"

#include "bk/errors.hpp"

namespace bk {

GermProblem::GermProblem(std::string name, std::vector<std::string> variables, WeightVector weights, Polynomial f)
    : name_(std::move(name)), variables_(std::move(variables)), weights_(std::move(weights)), f_(std::move(f)) {
  if (variables_.empty()) throw InputError("germ needs at least one variable");
  if (variables_.size() > 16) throw InputError("at most 16 variables are supported");
  if (weights_.size() != variables_.size()) throw InputError("weights length does not match variables length");
  if (f_.nvars() != variables_.size()) throw InputError("polynomial ring does not match variables");
  if (f_.is_zero()) throw InputError("f must be nonzero");
  const auto d = weighted_degree(f_, weights_);
  if (!d) {
    throw InputError("f is not quasi-homogeneous for the given weights; only quasi-homogeneous germs are supported");
  }
  if (*d == 0) throw InputError("quasi-homogeneity degree must be nonzero");
  degree_ = *d;
  if (f_.constant_term() != 0) throw InputError("f must vanish at the origin");
}

bool GermProblem::all_weights_positive() const {
  for (const auto& w : weights_.weights)
    if (w <= 0) return false;
  return true;
}

GermProblem GermProblem::with_inert_variable(const std::string& name, const Rational& w) const {
  std::vector<std::string> vars = variables_;
  vars.push_back(name);
  WeightVector wv = weights_;
  wv.weights.push_back(w);
  GermProblem g(name_ + "+" + name, std::move(vars), std::move(wv), f_.embed(nvars() + 1, 0));
  if (isolation_ == Isolation::Isolated) g.set_isolation(Isolation::NonIsolated);
  return g;
}

GermProblem make_germ(std::string name, std::vector<std::string> variables, const std::vector<std::string>& weights,
                      const std::string& polynomial) {
  WeightVector w;
  for (const auto& s : weights) {
    try {
      w.weights.push_back(parse_rational(s));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad weight: ") + e.what());
    }
  }
  Polynomial f;
  try {
    f = parse_polynomial(polynomial, variables);
  } catch (const ParseError& e) {
    throw InputError(std::string("polynomial: ") + e.what());
  }
  return GermProblem(std::move(name), std::move(variables), std::move(w), std::move(f));
}

}  // namespace bk

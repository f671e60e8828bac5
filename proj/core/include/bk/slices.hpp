#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bk/forms.hpp"
#include "bk/linalg.hpp"

namespace bk {

/// Finite piece of Omega^i: all x^a dx_I with weighted degree `weight` and,
/// when capped, |a| + |I| <= cap. Exterior derivative preserves |a| + |I|,
/// so capped slices are stable under d.
class FormSlice {
 public:
  struct Element {
    Monomial monomial;
    Wedge wedge;
  };

  /// With all weights positive the slice is finite and the cap is ignored;
  /// otherwise a cap is required (CapExceeded without one).
  static FormSlice enumerate(const WeightVector& w, int degree, const Rational& weight, std::optional<int> cap);

  int degree() const { return degree_; }
  const Rational& weight() const { return weight_; }
  /// True when the cap actually truncated an infinite slice.
  bool truncated() const { return truncated_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Element>& elements() const { return elements_; }

  std::optional<int> index_of(const Monomial& m, Wedge w) const;
  /// Coordinates of a form whose terms all lie in the slice; nullopt otherwise.
  std::optional<SparseVec> coordinates(const DifferentialForm& omega) const;
  DifferentialForm form(const SparseVec& v) const;
  DifferentialForm basis_form(std::size_t k) const;

 private:
  std::size_t nvars_ = 0;
  int degree_ = 0;
  Rational weight_;
  bool truncated_ = false;
  std::vector<Element> elements_;
  std::map<std::pair<Wedge, Monomial>, int> index_;
};

/// Assigns stable integer coordinates to (tag, wedge, monomial) keys as they
/// are first seen. Used for targets of linear maps that may leave a capped slice.
class DynamicIndexer {
 public:
  int index(int tag, Wedge w, const Monomial& m);
  SparseVec coordinates(int tag, const DifferentialForm& omega);
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<std::tuple<int, Wedge, Monomial>, int> keys_;
};

/// Sorted distinct weights of nonzero i-form slices, up to `max_weight`
/// (positive weights) or over forms with |a| + |I| <= cap.
std::vector<Rational> achievable_weights(const WeightVector& w, int degree, std::optional<Rational> max_weight,
                                         std::optional<int> cap);

}  // namespace bk

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

/// Sparse rational vector: (index, value) pairs sorted by index, no zeros.
class SparseVec {
 public:
  SparseVec() = default;
  static SparseVec unit(int index, const Rational& value = 1);
  static SparseVec from_map(const std::map<int, Rational>& m);

  const std::vector<std::pair<int, Rational>>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational at(int index) const;
  int leading_index() const { return entries_.front().first; }

  SparseVec& operator+=(const SparseVec& o) { return axpy(Rational(1), o); }
  SparseVec& operator-=(const SparseVec& o) { return axpy(Rational(-1), o); }
  SparseVec& operator*=(const Rational& c);
  /// this += c * o
  SparseVec& axpy(const Rational& c, const SparseVec& o);
  /// Shifts every index by `offset`.
  SparseVec shifted(int offset) const;

  void push_back(int index, Rational value);  // caller keeps indices increasing

  friend bool operator==(const SparseVec& a, const SparseVec& b);

 private:
  std::vector<std::pair<int, Rational>> entries_;
};

/// Incremental row-echelon basis of a subspace of Q^N. Every stored row has
/// a distinct pivot (its smallest index, scaled to 1) and remembers how it
/// was combined from the generators passed to insert(), so reduction also
/// yields an explicit linear combination.
class EchelonBasis {
 public:
  struct Reduction {
    SparseVec remainder;    // v minus its projection onto the span
    SparseVec combination;  // coefficients over generator ids: v - remainder = sum c_g gen_g
  };

  Reduction reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).remainder.is_zero(); }

  /// Adds generator `id`. Returns nullopt when it enlarged the span,
  /// otherwise the dependency: a combination over generator ids (including
  /// id itself with coefficient 1) that evaluates to zero.
  std::optional<SparseVec> insert(const SparseVec& v, int id);

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;
  };
  std::map<int, Row> rows_;
};

/// Kernel of the linear map whose column j is columns[j]: a basis of
/// {x : sum_j x_j columns[j] = 0}, each vector in column coordinates.
std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& columns);

/// Solves sum_j x_j columns[j] = target; nullopt when inconsistent.
std::optional<SparseVec> solve_columns(const std::vector<SparseVec>& columns, const SparseVec& target);

std::size_t rank_of(const std::vector<SparseVec>& vectors);

}  // namespace bk

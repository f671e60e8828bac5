#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bk/polynomial.hpp"

namespace bk {

enum class OrderKind { Lex, GRevLex, Weighted, Elimination };

/// A multiplicative well-order on monomials.
///
/// Weighted compares by a strictly positive weight vector and breaks ties
/// with grevlex. Elimination(k) is the block order grevlex(x_0..x_{k-1}) >
/// grevlex(x_k..), so any polynomial whose leading monomial avoids the first
/// block lies entirely in the remaining variables.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GRevLex, {}, 0); }
  static MonomialOrder weighted(std::vector<Rational> weights);
  static MonomialOrder elimination(std::size_t block);

  OrderKind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  const std::vector<Rational>& weights() const { return weights_; }

  /// -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Stable textual identity, used as part of cache keys.
  std::string key() const;

 private:
  MonomialOrder(OrderKind kind, std::vector<Rational> weights, std::size_t block)
      : kind_(kind), weights_(std::move(weights)), block_(block) {}

  OrderKind kind_;
  std::vector<Rational> weights_;
  std::size_t block_;
};

}  // namespace bk

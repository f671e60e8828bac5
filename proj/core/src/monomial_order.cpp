#include "bk/monomial_order.hpp"

#include <stdexcept>

namespace bk {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponents[i];
    db += b.exponents[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i] ? -1 : 1;
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::weighted(std::vector<Rational> weights) {
  for (const auto& w : weights)
    if (w <= 0) throw std::invalid_argument("weighted monomial order needs strictly positive weights");
  return MonomialOrder(OrderKind::Weighted, std::move(weights), 0);
}

MonomialOrder MonomialOrder::elimination(std::size_t block) { return MonomialOrder(OrderKind::Elimination, {}, block); }

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.exponents.size();
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? -1 : 1;
      return 0;
    case OrderKind::GRevLex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::Weighted: {
      Rational wa = 0, wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += weights_[i] * a.exponents[i];
        wb += weights_[i] * b.exponents[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return grevlex_range(a, b, 0, n);
    }
    case OrderKind::Elimination: {
      const int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GRevLex:
      return "grevlex";
    case OrderKind::Weighted: {
      std::string k = "weighted(";
      for (const auto& w : weights_) k += to_string(w) + ",";
      return k + ")";
    }
    case OrderKind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return {};
}

}  // namespace bk

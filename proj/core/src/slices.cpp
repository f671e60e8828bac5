#include "bk/slices.hpp"

#include <set>

#include "bk/errors.hpp"

namespace bk {

namespace {

bool all_positive(const WeightVector& w) {
  for (const auto& x : w.weights)
    if (x <= 0) return false;
  return true;
}

std::vector<Wedge> wedges_of_degree(std::size_t n, int degree) {
  std::vector<Wedge> out;
  const Wedge limit = Wedge{1} << n;
  for (Wedge m = 0; m < limit; ++m)
    if (wedge_degree(m) == degree) out.push_back(m);
  std::sort(out.begin(), out.end(), WedgeLess{});
  return out;
}

Rational wedge_weight(const WeightVector& w, Wedge wedge) {
  Rational s = 0;
  for (int i : wedge_indices(wedge)) s += w[static_cast<std::size_t>(i)];
  return s;
}

// Calls visit(exponents) for every monomial of weighted degree `target`
// (positive weights) or with total degree <= budget (any weights).
template <typename Visit>
void for_each_monomial(const WeightVector& w, const Rational& target, std::optional<int> budget, bool positive,
                       Visit&& visit) {
  const std::size_t n = w.size();
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, const Rational& remaining, int left) -> void {
    if (var + 1 == n) {
      const Rational& wl = w[var];
      if (wl == 0) {
        if (remaining != 0) return;
        for (int k = 0; k <= left; ++k) {
          e[var] = k;
          visit(e);
        }
        e[var] = 0;
        return;
      }
      const Rational q = remaining / wl;
      if (!is_integer(q) || q < 0) return;
      if (!q.get_num().fits_sint_p()) return;
      const int k = static_cast<int>(q.get_num().get_si());
      if (budget && k > left) return;
      e[var] = k;
      visit(e);
      e[var] = 0;
      return;
    }
    for (int k = 0;; ++k) {
      if (budget && k > left) break;
      const Rational rem = remaining - w[var] * k;
      if (positive && rem < 0) break;
      e[var] = k;
      self(self, var + 1, rem, budget ? left - k : 0);
    }
    e[var] = 0;
  };
  rec(rec, 0, target, budget.value_or(0));
}

}  // namespace

FormSlice FormSlice::enumerate(const WeightVector& w, int degree, const Rational& weight, std::optional<int> cap) {
  const bool positive = all_positive(w);
  if (!positive && !cap)
    throw CapExceeded("weight slice is infinite-dimensional (nonpositive weight) and no degree cap was given");
  FormSlice s;
  s.nvars_ = w.size();
  s.degree_ = degree;
  s.weight_ = weight;
  s.truncated_ = !positive;
  if (degree < 0 || static_cast<std::size_t>(degree) > w.size()) return s;
  for (Wedge wedge : wedges_of_degree(w.size(), degree)) {
    const Rational target = weight - wedge_weight(w, wedge);
    std::optional<int> budget;
    if (!positive) {
      budget = *cap - degree;
      if (*budget < 0) continue;
    }
    for_each_monomial(w, target, budget, positive, [&](const std::vector<int>& e) {
      Monomial m(e);
      s.index_.emplace(std::make_pair(wedge, m), static_cast<int>(s.elements_.size()));
      s.elements_.push_back(Element{std::move(m), wedge});
    });
  }
  return s;
}

std::optional<int> FormSlice::index_of(const Monomial& m, Wedge w) const {
  auto it = index_.find(std::make_pair(w, m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SparseVec> FormSlice::coordinates(const DifferentialForm& omega) const {
  std::map<int, Rational> acc;
  for (const auto& [w, c] : omega.coefficients())
    for (const auto& t : c.terms()) {
      auto k = index_of(t.monomial, w);
      if (!k) return std::nullopt;
      acc[*k] += t.coeff;
    }
  return SparseVec::from_map(acc);
}

DifferentialForm FormSlice::form(const SparseVec& v) const {
  DifferentialForm out(nvars_, degree_);
  std::map<Wedge, std::vector<Term>> parts;
  for (const auto& [k, x] : v.entries()) {
    const auto& e = elements_.at(static_cast<std::size_t>(k));
    parts[e.wedge].push_back(Term{e.monomial, x});
  }
  for (auto& [w, terms] : parts) out.add(w, Polynomial::from_terms(nvars_, std::move(terms)));
  return out;
}

DifferentialForm FormSlice::basis_form(std::size_t k) const {
  const auto& e = elements_.at(k);
  return DifferentialForm::basis(nvars_, e.wedge, Polynomial::term(e.monomial, 1));
}

int DynamicIndexer::index(int tag, Wedge w, const Monomial& m) {
  auto [it, inserted] = keys_.try_emplace(std::make_tuple(tag, w, m), static_cast<int>(keys_.size()));
  return it->second;
}

SparseVec DynamicIndexer::coordinates(int tag, const DifferentialForm& omega) {
  std::map<int, Rational> acc;
  for (const auto& [w, c] : omega.coefficients())
    for (const auto& t : c.terms()) acc[index(tag, w, t.monomial)] += t.coeff;
  return SparseVec::from_map(acc);
}

std::vector<Rational> achievable_weights(const WeightVector& w, int degree, std::optional<Rational> max_weight,
                                         std::optional<int> cap) {
  const bool positive = all_positive(w);
  if (positive && !max_weight && !cap) throw std::invalid_argument("achievable_weights needs a bound");
  if (!positive && !cap) throw CapExceeded("nonpositive weights need a degree cap");
  std::set<Rational> found;
  if (degree < 0 || static_cast<std::size_t>(degree) > w.size()) return {};
  const std::size_t n = w.size();
  for (Wedge wedge : wedges_of_degree(n, degree)) {
    const Rational base = wedge_weight(w, wedge);
    std::vector<int> e(n, 0);
    const int budget = cap ? *cap - degree : 0;
    if (cap && budget < 0) continue;
    auto rec = [&](auto&& self, std::size_t var, const Rational& acc, int left) -> void {
      if (var == n) {
        if (!max_weight || acc <= *max_weight) found.insert(acc);
        return;
      }
      for (int k = 0;; ++k) {
        if (cap && k > left) break;
        const Rational next = acc + w[var] * k;
        if (positive && max_weight && next > *max_weight) break;
        self(self, var + 1, next, cap ? left - k : 0);
      }
    };
    rec(rec, 0, base, budget);
  }
  return {found.begin(), found.end()};
}

}  // namespace bk

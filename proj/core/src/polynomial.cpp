#include "bk/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace bk {

int Monomial::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += other.exponents[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    r.exponents[i] -= other.exponents[i];
    assert(r.exponents[i] >= 0);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? -1 : 1;
  return 0;
}

Rational WeightVector::of(const Monomial& m) const {
  Rational r = 0;
  for (std::size_t i = 0; i < m.exponents.size(); ++i)
    if (m.exponents[i] != 0) r += weights[i] * m.exponents[i];
  return r;
}

namespace {

bool grlex_greater(const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; }

// Merges two descending term lists; sign is applied to the second.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = grlex_compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = a[i].coeff;
      if (subtract) c -= b[j].coeff;
      else c += b[j].coeff;
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exponents.at(index) = 1;
  return term(std::move(m), Rational(1));
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p(m.nvars());
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.total_degree() == 0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_compare(t.monomial, key) > 0; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int Polynomial::total_degree() const {
  // grlex puts the highest total degree first
  return terms_.empty() ? -1 : terms_.front().monomial.total_degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(*this);
  r *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves grlex order
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(nvars_);
  if (o.size() == 1) return mul_term(o.terms_[0].monomial, o.terms_[0].coeff);
  if (size() == 1) return o.mul_term(terms_[0].monomial, terms_[0].coeff);
  std::vector<Term> all;
  all.reserve(size() * o.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.push_back(Term{a.monomial * b.monomial, a.coeff * b.coeff});
  return from_terms(nvars_, std::move(all));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::embed(std::size_t nvars, std::size_t offset) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars_; ++i) m.exponents.at(offset + i) = t.monomial.exponents[i];
    out.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(nvars, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::optional<Rational> weighted_degree(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) throw std::invalid_argument("weighted_degree of the zero polynomial");
  if (w.size() != p.nvars()) throw std::invalid_argument("weight vector length does not match variable count");
  const Rational first = w.of(p.terms().front().monomial);
  for (const auto& t : p.terms())
    if (w.of(t.monomial) != first) return std::nullopt;
  return first;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const int e = t.monomial.exponents.at(var);
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.exponents[var] = e - 1;
    out.push_back(Term{std::move(m), t.coeff * e});
  }
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

std::string to_string(const Polynomial& p, std::span<const std::string> vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.exponents.size(); ++i) {
      const int e = t.monomial.exponents[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace bk

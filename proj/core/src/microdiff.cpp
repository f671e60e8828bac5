#include "bk/microdiff.hpp"

#include <cctype>

#include "bk/errors.hpp"
#include "bk/linalg.hpp"

namespace bk {

SkewElement SkewElement::one(int cap) { return monomial(0, 0, 1, cap); }

SkewElement SkewElement::monomial(int j, int k, const Rational& c, int cap) {
  SkewElement x(cap);
  x.add_term(j, k, c);
  return x;
}

void SkewElement::add_term(int j, int k, const Rational& c) {
  if (c == 0) return;
  if (j > cap_) throw CapExceeded("s-power " + std::to_string(j) + " exceeds the cap " + std::to_string(cap_));
  auto [it, inserted] = terms_.try_emplace({j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SkewElement::coefficient(int j, int k) const {
  auto it = terms_.find({j, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  for (const auto& [jk, c] : o.terms_) add_term(jk.first, jk.second, c);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  for (const auto& [jk, c] : o.terms_) add_term(jk.first, jk.second, -c);
  return *this;
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
  SkewElement r(*this);
  r += o;
  return r;
}

SkewElement SkewElement::operator-(const SkewElement& o) const {
  SkewElement r(*this);
  r -= o;
  return r;
}

SkewElement SkewElement::operator*(const Rational& c) const {
  SkewElement r(cap_);
  for (const auto& [jk, x] : terms_) r.add_term(jk.first, jk.second, x * c);
  return r;
}

SkewElement SkewElement::left_multiply_t() const {
  SkewElement r(cap_);
  for (const auto& [jk, c] : terms_) {
    const auto [j, k] = jk;
    r.add_term(j, k + 1, c);
    if (j > 0) r.add_term(j + 1, k, c * j);
  }
  return r;
}

SkewElement SkewElement::operator*(const SkewElement& o) const {
  const int cap = std::min(cap_, o.cap_);
  SkewElement r(cap);
  // (s^a t^b) * o = s^a (t^b o)
  std::map<int, SkewElement> t_powers;
  for (const auto& [jk, c] : terms_) {
    const auto [a, b] = jk;
    auto it = t_powers.find(b);
    if (it == t_powers.end()) {
      SkewElement y = o;
      y.cap_ = cap;
      for (int i = 0; i < b; ++i) y = y.left_multiply_t();
      it = t_powers.emplace(b, std::move(y)).first;
    }
    for (const auto& [jk2, c2] : it->second.terms_) r.add_term(a + jk2.first, jk2.second, c * c2);
  }
  return r;
}

std::vector<Letter> parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  while (i < text.size()) {
    const char c = text[i];
    if (c != 't' && c != 's') throw InputError("word letters must be 't' or 's' at position " + std::to_string(i));
    ++i;
    int power = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InputError("expected exponent at position " + std::to_string(start));
      power = std::stoi(std::string(text.substr(start, i - start)));
    }
    out.push_back(Letter{c, power});
    skip();
  }
  return out;
}

SkewElement normal_order(const std::vector<Letter>& word, int cap) {
  SkewElement r = SkewElement::one(cap);
  // fold from the right so every step is a left multiplication
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->power < 0) throw InputError("negative letter power");
    if (it->symbol == 't') {
      for (int i = 0; i < it->power; ++i) r = r.left_multiply_t();
    } else {
      SkewElement shifted(cap);
      for (const auto& [jk, c] : r.terms()) shifted += SkewElement::monomial(jk.first + it->power, jk.second, c, cap);
      r = shifted;
    }
  }
  return r;
}

std::string to_string(const SkewElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto [j, k] = it->first;
    const Rational& c = it->second;
    std::string mono;
    if (j > 0) mono += j == 1 ? "s" : "s^" + std::to_string(j);
    if (k > 0) mono += (mono.empty() ? "" : "*") + (k == 1 ? std::string("t") : "t^" + std::to_string(k));
    std::string coeff;
    if (mono.empty()) coeff = to_string(c);
    else if (c == -1) coeff = "-";
    else if (c != 1) coeff = to_string(c) + "*";
    const std::string term = coeff + mono;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

StExpansionCertificate st_expansion_certificate(int p, int q, int cap) {
  if (p < 1 || q < 1) throw InputError("expansion A needs positive p, q");
  StExpansionCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.expansion = normal_order({{'t', p + q - 1}, {'s', 1}}, cap);
  cert.pure_coefficient = cert.expansion.coefficient(p + q, 0);
  cert.expected = factorial(static_cast<unsigned long>(p + q - 1));
  for (const auto& [jk, c] : cert.expansion.terms())
    if (jk.first != p + q && jk.second == 0) cert.others_carry_t = false;
  return cert;
}

std::optional<std::vector<Rational>> s_power_decomposition(int p, int cap) {
  if (p < 1) throw InputError("p must be positive");
  std::map<std::pair<int, int>, int> index;
  auto coords = [&](const SkewElement& x) {
    std::map<int, Rational> m;
    for (const auto& [jk, c] : x.terms()) {
      auto [it, ins] = index.try_emplace(jk, static_cast<int>(index.size()));
      m[it->second] += c;
    }
    return SparseVec::from_map(m);
  };
  std::vector<SparseVec> cols;
  for (int j = 0; j <= p; ++j) cols.push_back(coords(normal_order({{'s', j}, {'t', p}, {'s', p - j}}, cap)));
  auto x = solve_columns(cols, coords(SkewElement::s_power(2 * p, cap)));
  if (!x) return std::nullopt;
  std::vector<Rational> lambda(static_cast<std::size_t>(p + 1));
  for (const auto& [j, v] : x->entries()) lambda[static_cast<std::size_t>(j)] = v;
  return lambda;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int cap) {
  TruncatedSeries s;
  s.cap = cap;
  s.coeffs.assign(static_cast<std::size_t>(cap + 1), Rational(0));
  s.coeffs[0] = c;
  return s;
}

Rational TruncatedSeries::coefficient(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs.size()) return 0;
  return coeffs[static_cast<std::size_t>(k)];
}

IntegrationResult integrate_series(const TruncatedSeries& u) {
  IntegrationResult r;
  r.series.cap = u.cap;
  r.series.coeffs.assign(static_cast<std::size_t>(u.cap + 1), Rational(0));
  for (int k = 0; k <= u.cap; ++k) {
    const Rational c = u.coefficient(k);
    if (c == 0) continue;
    if (k + 1 > u.cap) {
      ++r.dropped;
      continue;
    }
    r.series.coeffs[static_cast<std::size_t>(k + 1)] = c / (k + 1);
  }
  return r;
}

}  // namespace bk

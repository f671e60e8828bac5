#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

inline constexpr int kDefaultSkewCap = 64;

/// Element of the algebra generated by t and s = d_t^{-1} with
/// [t, s] = s^2, kept as sum c_{jk} s^j t^k (s to the left). Products whose
/// s-degree exceeds the cap throw CapExceeded.
class SkewElement {
 public:
  explicit SkewElement(int cap = kDefaultSkewCap) : cap_(cap) {}

  static SkewElement one(int cap = kDefaultSkewCap);
  static SkewElement monomial(int j, int k, const Rational& c = 1, int cap = kDefaultSkewCap);
  static SkewElement s_power(int j, int cap = kDefaultSkewCap) { return monomial(j, 0, 1, cap); }
  static SkewElement t_power(int k, int cap = kDefaultSkewCap) { return monomial(0, k, 1, cap); }

  int cap() const { return cap_; }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  Rational coefficient(int j, int k) const;
  bool is_zero() const { return terms_.empty(); }

  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  SkewElement operator+(const SkewElement& o) const;
  SkewElement operator-(const SkewElement& o) const;
  SkewElement operator*(const Rational& c) const;
  SkewElement operator*(const SkewElement& o) const;

  /// t * this, using t s^j = s^j t + j s^{j+1}.
  SkewElement left_multiply_t() const;

  friend bool operator==(const SkewElement& a, const SkewElement& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int j, int k, const Rational& c);

  int cap_;
  std::map<std::pair<int, int>, Rational> terms_;  // (s-power, t-power)
};

/// A word is a sequence of letter powers, e.g. t^2 s t s^3.
struct Letter {
  char symbol;  // 't' or 's'
  int power;
};

/// Parses "t^2 s t s^3" (also "t^2*s*t*s^3"); throws InputError.
std::vector<Letter> parse_word(std::string_view text);
SkewElement normal_order(const std::vector<Letter>& word, int cap = kDefaultSkewCap);

/// "2*s^3 + s^2*t" style text, terms by descending s-power then t-power.
std::string to_string(const SkewElement& x);

/// Expansion of t^{p+q-1} s: the pure s^{p+q} coefficient, which should be
/// (p+q-1)!, and whether every other term carries a positive t-power.
struct StExpansionCertificate {
  int p = 0, q = 0;
  SkewElement expansion;
  Rational pure_coefficient;
  Integer expected;
  bool others_carry_t = true;
  bool holds() const { return pure_coefficient == Rational(expected) && others_carry_t; }
};
StExpansionCertificate st_expansion_certificate(int p, int q, int cap = kDefaultSkewCap);

/// Coefficients lambda_0..lambda_p with s^{2p} = sum_j lambda_j s^j t^p s^{p-j};
/// nullopt when the linear system is inconsistent.
std::optional<std::vector<Rational>> s_power_decomposition(int p, int cap = kDefaultSkewCap);

/// Coefficients of t^0..t^cap.
struct TruncatedSeries {
  std::vector<Rational> coeffs;
  int cap = 0;

  static TruncatedSeries constant(const Rational& c, int cap);
  Rational coefficient(int k) const;
};

struct IntegrationResult {
  TruncatedSeries series;
  /// Terms pushed past the cap (t^cap integrates to t^{cap+1}).
  int dropped = 0;
};

/// t^k -> t^{k+1}/(k+1); the constant term of the result is 0.
IntegrationResult integrate_series(const TruncatedSeries& u);

}  // namespace bk

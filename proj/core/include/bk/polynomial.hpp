#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

/// Dense exponent vector; the length is the variable count of the ring.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  std::size_t nvars() const { return exponents.size(); }
  int total_degree() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) with roles swapped: returns this / other.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on the raw vectors; used only for keyed containers.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents <=> b.exponents; }
};

/// Graded-lexicographic comparison: -1, 0 or 1.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Rational weights, one per variable. Zero and negative entries are allowed.
struct WeightVector {
  std::vector<Rational> weights;

  std::size_t size() const { return weights.size(); }
  const Rational& operator[](std::size_t i) const { return weights[i]; }
  Rational of(const Monomial& m) const;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted by
/// descending grlex order with no zero coefficients, so equality is
/// structural and serialization is canonical.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(Monomial m, const Rational& c);
  /// Combines duplicates, drops zeros and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial(nvars_)); }
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned exponent) const;

  /// Re-embeds into a ring with `nvars` variables, placing variable i at
  /// index offset + i.
  Polynomial embed(std::size_t nvars, std::size_t offset) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Common weighted degree of all terms, or nullopt when the terms have
/// different degrees. Throws std::invalid_argument for the zero polynomial.
std::optional<Rational> weighted_degree(const Polynomial& p, const WeightVector& w);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace insignificant, optional leading sign):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*' | '/') factor)*      ('/' needs a nonzero constant)
///   factor := base ('^' uint)?
///   base   := rational | variable | '(' expr ')'
///   rational := int ('/' uint)?
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars);

/// Canonical text, e.g. "1/5*x^5 + 1/5*y^5 + 1/3*x^3*y^3*z". Re-parses to
/// the same polynomial.
std::string to_string(const Polynomial& p, std::span<const std::string> vars);

}  // namespace bk

#pragma once

#include <random>

#include "bk/forms.hpp"
#include "bk/polynomial.hpp"

namespace bk::testing {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m(nvars);
    for (auto& x : m.exponents) x = e(rng);
    ts.push_back({m, small_rational(rng)});
  }
  return Polynomial::from_terms(nvars, ts);
}

inline DifferentialForm random_form(std::mt19937_64& rng, std::size_t nvars, int degree, int max_deg) {
  DifferentialForm out(nvars, degree);
  for (Wedge w = 0; w < (Wedge(1) << nvars); ++w)
    if (wedge_degree(w) == degree) out.add(w, random_poly(rng, nvars, 2, max_deg));
  return out;
}

}  // namespace bk::testing

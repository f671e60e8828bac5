#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bk {

// Exact rationals. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every mutation goes through its
// arithmetic operators; raw mpq_t access must call canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or zero denominator.
Rational parse_rational(std::string_view text);

Rational rational_pow(const Rational& base, unsigned long exponent);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Representative of q modulo 1 in (lo, lo+1] (open_low) or [lo, lo+1).
Rational reduce_mod_one(const Rational& q, const Rational& lo, bool open_low);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace bk

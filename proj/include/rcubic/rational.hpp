#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rcubic {

// Exact rationals. mpq_class keeps values canonical (positive denominator,
// coprime parts) as long as every constructor path goes through
// make_rational() or parse_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational abs_value(const Rational& r) { return abs(r); }

/// 2^-k as an exact rational.
Rational pow2_inverse(unsigned k);

/// 10^-k as an exact rational.
Rational pow10_inverse(unsigned k);

/// Midpoint (a+b)/2.
Rational midpoint(const Rational& a, const Rational& b);

}  // namespace rcubic

#pragma once

// Exact scalars. Integer and Rational are GMP's C++ classes; everything in
// this header is glue for construction, conversion, and the "num/den" text
// form used by every exporter.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace eulerpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Build num/den in lowest terms. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/// "num/den" with a positive denominator, integers included ("3/1").
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "num/den", integers, decimals and scientific forms
/// ("251/30", "-7", "0.125", "1e-30"). The result is exact: "1e-30" is
/// 1/10^30, not the nearest double. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// 10^e as an exact rational, e may be negative.
Rational pow10(long e);

/// Nearest double. GMP's mpq_get_d truncates; this rounds to nearest even
/// at the cost of one extra division.
double to_double(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Rational pow(const Rational& base, unsigned e);

}  // namespace eulerpoly

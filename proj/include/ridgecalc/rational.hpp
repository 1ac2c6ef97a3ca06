#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ridgecalc {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) after every
// arithmetic operation; values built from raw parts go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p" (optional leading '-'). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "p/q" in lowest terms, e.g. "1/1", "-3/2".
std::string format_rational(const Rational& q);

Integer floor_rational(const Rational& q);

/// Exact value of a finite double.
Rational rational_from_double(double v);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace ridgecalc

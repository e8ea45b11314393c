#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bgaps {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "-p/q", plain integers and finite decimals ("1.38593", "-0.5").
// Decimals are converted exactly. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// num / den in lowest terms.
Rational frac(const Integer& num, const Integer& den);

// Largest rational with the given denominator that does not exceed q.
Rational floor_to_denominator(const Rational& q, const Integer& denominator);
// Smallest rational with the given denominator that is not below q.
Rational ceil_to_denominator(const Rational& q, const Integer& denominator);

// Fixed-point decimal rendering, truncated toward zero after `digits` places.
std::string to_decimal(const Rational& q, unsigned digits);

Integer pow10(unsigned e);

Rational pow(const Rational& base, unsigned e);

}  // namespace bgaps

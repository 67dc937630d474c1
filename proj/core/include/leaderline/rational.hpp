#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leaderline {

// Exact arithmetic for every coordinate, height and objective value.
using Rational = mpq_class;

// Parses "12", "-3.25" or "7/6". Scientific notation is rejected.
// Throws MalformedInput on anything else.
Rational parse_rational(std::string_view text);

// Terminating decimals are printed as decimals ("1.5"), everything else as
// a reduced fraction ("1/6"). parse_rational(format_rational(q)) == q.
std::string format_rational(const Rational& value);

// num/den in lowest terms. mpq_class(num, den) alone leaves 2/4 as is,
// which breaks equality and ordering.
Rational fraction(long num, long den);

double to_double(const Rational& value);

Rational abs(const Rational& value);

// floor(value) as a Rational with denominator 1.
Rational floor(const Rational& value);

}  // namespace leaderline

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polytc {

// Exact arithmetic throughout: genericity is an equality test on subset
// sums, so floating point is never used anywhere in the suite.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a" or "a/b" (optional sign, surrounding whitespace tolerated).
// Throws input_error on malformed text or non-positive denominator use
// like "1/0".
Rational parse_rational(const std::string& text);

// Parses a comma-separated list of rationals, e.g. "1, 1, 1/2, 2".
std::vector<Rational> parse_rational_list(const std::string& text);

// Canonical "a" / "a/b" form (denominator omitted when 1).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace polytc

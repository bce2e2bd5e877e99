#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fpg {

// Exact rational coefficients. mpq_class keeps values canonical (lowest
// terms, positive denominator) once canonicalize() has been called; all
// construction goes through these helpers so that invariant always holds.
using Rational = mpq_class;

/// Rational from a small integer pair; normalizes sign and common factors.
Rational make_rational(long numerator, long denominator = 1);

/// Parses "p" or "p/q" in decimal (q > 0 after normalization).
/// Throws ParseError on anything else.
Rational rational_from_string(std::string_view text);

/// Renders "p" or "p/q" in lowest terms.
std::string rational_to_string(const Rational& value);

}  // namespace fpg

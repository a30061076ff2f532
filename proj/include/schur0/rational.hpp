#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schur0 {

// Exact rationals. mpq_class keeps values canonical (gcd 1, positive denominator)
// as long as every construction path goes through canonicalize().
using Rational = mpq_class;

/// p/q in lowest terms. Throws std::invalid_argument when q == 0.
Rational make_rational(long p, long q);

/// Parses "p/q" or "p" (optional sign). Throws std::invalid_argument on bad
/// syntax or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", including "0/1" and "3/1".
std::string to_fraction_string(const Rational& value);

/// "p" for integers, "p/q" otherwise.
std::string to_display_string(const Rational& value);

/// base^exponent with the convention 0^0 = 1.
Rational power(const Rational& base, unsigned exponent);

}  // namespace schur0

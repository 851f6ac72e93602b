#pragma once

#include <gmpxx.h>

#include <string>

namespace ramur {

// Exact rational arithmetic for every model quantity. The axioms are stated
// as exact equalities, so nothing in the library ever rounds; tolerance-based
// comparisons exist only as an explicit epsilon at the report layer.
using Rational = mpq_class;

/// num/den reduced to lowest terms, so rat(2, 4) == rat(1, 2).
Rational rat(long num, long den = 1);

/// Parses "num/den" or a bare integer ("0", "1", "3/4"). Throws ParseError on
/// malformed text or a zero denominator. Non-canonical input is reduced.
Rational parse_rational(const std::string& text);

/// Canonical text form ("0", "1", "3/4"); inverse of parse_rational.
std::string rational_str(const Rational& value);

/// True when 0 <= value <= 1.
bool is_probability(const Rational& value);

}  // namespace ramur

#ifndef MCENTER_RATIONAL_HPP
#define MCENTER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mcenter {

// Exact rational scalar. GMP keeps every result reduced with a positive
// denominator; values built from raw strings go through parse_rational,
// which canonicalizes.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Parses "p/q", an integer, or a decimal ("0.125", "-2.5e-1") into an exact
/// rational. Decimals are read as fractions over powers of ten.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::vector<std::string> to_strings(const RationalVector& values);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Lexicographic comparison, used for canonical sorting of points.
bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace mcenter

#endif  // MCENTER_RATIONAL_HPP

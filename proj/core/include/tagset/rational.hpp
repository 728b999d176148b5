#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tagset {

// Exact rational arithmetic. Every predicate in this library compares
// rationals exactly; floating point never participates in a decision.
// cpp_rational keeps values canonical: lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "-p", "+p", "p/q" with arbitrary-precision digits.
// Rejects q = 0, embedded whitespace, and trailing garbage.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: sign on the numerator, "p" when the denominator is 1,
// otherwise "p/q" in lowest terms. parse_rational round-trips it.
std::string format_rational(const Rational& r);

// Decimal expansion of sqrt(value) truncated to `digits` fractional digits.
// Display only; callers must not branch on it. Requires value >= 0.
std::string sqrt_decimal(const Rational& value, unsigned digits = 9);

} // namespace tagset

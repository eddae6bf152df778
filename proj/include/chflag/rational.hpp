#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chflag {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// after every arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses a plain decimal numeral such as "-69.83", "0.3465" or "2078".
// Exponents, "inf"/"nan" and binary floats are rejected.
Rational parse_decimal(std::string_view text);

// Accepts either "p/q" or a plain decimal numeral.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Number of fractional digits needed to write `value` exactly in base 10,
// or nullopt when the expansion does not terminate.
std::optional<int> decimal_places(const Rational& value);

// Exact decimal rendering with exactly `places` fractional digits.
// Throws std::invalid_argument if `value` is not representable.
std::string to_decimal_string(const Rational& value, int places);

// Shortest exact decimal rendering. Throws if not terminating.
std::string to_decimal_string(const Rational& value);

// Truncates toward zero to `places` fractional digits.
Rational truncate_decimal(const Rational& value, int places);

// Rounds half away from zero to `places` fractional digits.
Rational round_decimal(const Rational& value, int places);

Rational rational_from_double(double value);

// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
// unreduced values compare wrongly.
Rational make_rational(long num, long den);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace chflag

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bintail {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Rounding { down, up, nearest, toward_zero };

/// Parses "a/b", "a", or a finite decimal such as "0.125" into an exact
/// rational. No binary floating point is involved. Throws ArgumentError.
Rational parse_rational(std::string_view text);

/// Copy in lowest terms; GMP arithmetic assumes canonical operands.
Rational canonical(Rational value);

/// "num/den" in lowest terms; integers keep the "/1" suffix.
std::string to_fraction_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Rounds value * 10^scale to an integer in the given direction.
Integer scaled_integer(const Rational& value, long scale, Rounding mode);

/// Full decimal expansion when the denominator has only the prime factors
/// 2 and 5, otherwise nullopt.
std::optional<std::string> exact_decimal(const Rational& value);

/// Truncates toward zero to `places` decimals ("0.3655").
std::string truncated_decimal(const Rational& value, int places);

/// Scientific notation "d.ddd...e+XX" with `digits` significant digits.
std::string scientific(const Rational& value, int digits, Rounding mode);

/// Human-readable decimal with `digits` significant digits (nearest), plain
/// notation for moderate exponents and scientific otherwise.
std::string significant(const Rational& value, int digits);

/// exact_decimal when it exists, otherwise `significant(value, fallback_digits)`.
std::string decimal_or_significant(const Rational& value, int fallback_digits = 30);

}  // namespace bintail

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flexcat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal integer ("-17", "42").
Integer parse_integer(std::string_view text);

/// Parses "p/q" or "p". The denominator must be positive; the result is
/// canonicalized, so "2/4" reads as 1/2.
Rational parse_rational(std::string_view text);

/// Exact value of a finite decimal literal: "0.29" -> 29/100, "1" -> 1.
Rational decimal_to_rational(std::string_view text);

/// Accepts either form above. Used wherever the CLI takes probabilities.
Rational parse_rational_or_decimal(std::string_view text);

std::string to_string(const Integer& value);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);

/// value - floor(value), always in [0, 1).
Rational fractional_part(const Rational& value);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace flexcat

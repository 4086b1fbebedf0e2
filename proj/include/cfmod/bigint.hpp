#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cfmod {

/// Arbitrary-precision signed integer used throughout the library.
using Int = mpz_class;

/// Exact rational number (always kept in canonical form).
using Rational = mpq_class;

/// Parses decimal or 0x-prefixed hexadecimal text into an integer.
/// An optional leading '-' is accepted; whitespace and embedded
/// separators are not. Throws ParseError on malformed input.
Int parse_integer(std::string_view text);

/// Renders an integer in decimal.
std::string to_decimal(const Int& value);

/// Natural logarithm of a positive integer, usable far beyond the
/// range where mpz_get_d stays finite.
double log_int(const Int& value);

}  // namespace cfmod

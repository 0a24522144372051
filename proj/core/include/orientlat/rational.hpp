#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace orientlat {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
/// q - floor(q), in [0, 1).
Rational frac_of(const Rational& q);
bool is_integer(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading '-', q > 0. Decimal
/// points, exponents and whitespace are rejected. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Throws InputError when z does not fit in int64.
std::int64_t to_int64(const Integer& z);

}  // namespace orientlat

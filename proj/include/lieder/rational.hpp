#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lieder {

/// Exact rational scalar. GMP keeps the value canonical: positive
/// denominator, reduced fraction, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace lieder

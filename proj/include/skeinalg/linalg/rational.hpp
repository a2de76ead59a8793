#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skeinalg {

/// Exact rational number. GMP keeps mpq values canonical (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

}  // namespace skeinalg

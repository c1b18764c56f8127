#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fdg {

using Integer = mpz_class;
/// Exact rational; mpq_class keeps values canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise, always in lowest terms with q > 0.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace fdg

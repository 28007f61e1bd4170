#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fglh {

/// Exact rational scalar. GMP keeps every mpq_class result in lowest terms with
/// a positive denominator, which is the canonical form the rest of the engine
/// relies on for structural equality.
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading '-') and canonicalizes. Throws Error on bad input.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

} // namespace fglh

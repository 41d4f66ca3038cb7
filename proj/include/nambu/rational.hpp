#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nambu {

// The ground field: arbitrary-precision rationals, always in canonical form
// (reduced, positive denominator). GMP keeps results canonical for us.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Canonical textual form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q". Rejects malformed strings and zero denominators.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace nambu

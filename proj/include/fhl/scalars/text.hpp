#pragma once

#include <string>
#include <string_view>

#include "fhl/scalars/scalar.hpp"

namespace fhl {

// Parses the textual scalar syntax: integers, registry names (v, u, w,
// c1..c8) and q (read as v^2), combined with + - * / ^ and parentheses.
// Exponents are signed integers (v^-2). Throws ParseError with a 1-based
// line/column, or UnknownVariable for names outside the registry.
Scalar parse_scalar(std::string_view text);

// Canonical printed form; parse_scalar(format_scalar(s)) == s.
inline std::string format_scalar(const Scalar& s) { return s.to_string(); }

}  // namespace fhl

#pragma once

#include <string>

#include "eulerg/nonhomo.hpp"

namespace eulerg {

/// Compiles a right-hand side such as "z^3 - 2*exp(z)/3" into a callable.
///
/// Grammar: decimal literals, the variable z, binary + - * / ^ (the caret is
/// right associative and binds tighter than unary minus), the functions exp,
/// sin, cos, ln, and parentheses. Whitespace is ignored. Throws Error(Parse)
/// with the offending column on malformed input.
RhsFunction parse_expression(const std::string& text);

}  // namespace eulerg

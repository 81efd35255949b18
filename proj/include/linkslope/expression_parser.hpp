#pragma once

#include <cstddef>
#include <string_view>

#include "linkslope/laurent_poly.hpp"
#include "linkslope/rational_function.hpp"

namespace linkslope {

/// Which variable names an expression may use: `t`/`t0`, `t1`, ... or `s`/`s0`, `s1`, ...
enum class VariableFamily { T, S };

/// Parses arithmetic over the chosen variables: `+ - * /`, `^` with a signed
/// integer exponent, parentheses, integer literals, and implicit products
/// such as `(1-t1)(1-t1^-1)`. Throws ParseError with a character offset.
RationalFunction parse_rational_function(std::string_view text, std::size_t nvars,
                                         VariableFamily family = VariableFamily::T);

/// As above, but the result must be a Laurent polynomial.
LaurentPoly parse_laurent(std::string_view text, std::size_t nvars, VariableFamily family = VariableFamily::T);

}  // namespace linkslope

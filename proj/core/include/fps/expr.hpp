#ifndef FPS_EXPR_HPP
#define FPS_EXPR_HPP

#include <optional>
#include <string_view>

#include <fps/series.hpp>

namespace fps
{

// Parses an exact series from text such as "z + z^2 @4", "(1-z)^2 @3" or
// "1/2 + 3i*z @2".
//
//   input   := expr ['@' integer]
//   expr    := term {('+' | '-') term}
//   term    := unary {['*' | '/'] unary}      juxtaposition multiplies
//   unary   := ('+' | '-') unary | power
//   power   := primary ['^' integer]
//   primary := number | 'z' | 'i' | '(' expr ')'
//   number  := digits ['.' digits] [('e' | 'E') ['+' | '-'] digits]
//
// Decimal literals are read exactly (0.5 is 1/2). Division requires a divisor
// with nonzero constant term. The truncation order comes from "@N", else from
// default_order; parse_error (with byte offset) is thrown when neither exists.
series parse_series_expr(std::string_view text, std::optional<int> default_order = std::nullopt);

// A single constant such as "1/2", "-3+2i" or "0.25"; used for CLI scalars.
coefficient parse_coefficient_expr(std::string_view text);

} // namespace fps

#endif

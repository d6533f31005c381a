#ifndef RAZZABONI_EXPR_HPP
#define RAZZABONI_EXPR_HPP

#include <string>

#include "razzaboni/frenet.hpp"

namespace razzaboni {

/// Compiles a profile expression in the variable u into a callable.
/// Grammar: numbers, u, + - * /, unary minus, parentheses, and the
/// functions sin, cos, cosh, exp. Throws ParseError on malformed input.
ScalarFn parse_profile(const std::string& text);

/// One-shot convenience: parse and evaluate at a point.
double eval_profile(const std::string& text, double u);

}  // namespace razzaboni

#endif

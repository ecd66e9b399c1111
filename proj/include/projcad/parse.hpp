#pragma once

// Reader for problem files:
//
//   # comment
//   vars: x, y
//   x^2 + y^2 - 1
//
// One polynomial per line, integer coefficients, operators + - * ^ and
// parentheses. Exponents are nonnegative integer literals.

#include <string_view>
#include <vector>

#include "projcad/polyring.hpp"

namespace projcad {

struct Problem {
    VarOrder order;
    std::vector<Poly> polys;
};

/// Throws ParseError with the 1-based line and column of the offending token.
Problem parse_input(std::string_view text);

/// Parses a single expression over a known order.
Poly parse_poly(std::string_view expr, const VarOrder& order);

}  // namespace projcad

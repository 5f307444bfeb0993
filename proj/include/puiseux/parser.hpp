#pragma once

#include "puiseux/equation.hpp"

#include <stdexcept>
#include <string>

namespace puiseux {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: sums of products of x | y | y1 | numbers | sqrt(int) | i, with
// ^integer or ^(integer/integer) exponents and parenthesized groups.
// y1 may appear to total degree at most 1.
CoveredEquation parse_equation(const std::string& text, const OperatorSpec& op);

// Same grammar restricted to x, e.g. "- x - sqrt(11)*x^(3/2) - (121/30)*x^2".
PuiseuxPoly parse_series(const std::string& text);

// Constant expressions, e.g. "-121/30", "sqrt(11)", "3+i/4", "0.25".
Scalar parse_scalar(const std::string& text);

} // namespace puiseux

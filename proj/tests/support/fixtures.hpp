#pragma once

#include "puiseux/parser.hpp"

namespace puiseux::testing {

// the running quartic example: y^4 + x^3 y^3 + x y^2 - x^3 y + x^5 + (x y^3 - x^2 y) y1
inline const char* kFigureEquation = "y^4 + x^3*y^3 + x*y^2 - x^3*y + x^5 + (x*y^3 - x^2*y)*y1";

// the exhaustively worked equation with solution -x - sqrt(11) x^{3/2} - 121/30 x^2 + ...
inline const char* kWorkedEquation =
    "y^4 + 4*y^3*x + 5*y^2*x^2 + 2*y*x^3 + y*x^4 + 4*x^5 + x^7"
    " + (-y^3*x - 4*y^2*x^2 - 5*y*x^3 - 2*x^4 + 3*x^5)*y1";

inline const char* kWorkedSolution = "- x - sqrt(11)*x^(3/2) - (121/30)*x^2";

inline CoveredEquation figure_eq(const OperatorSpec& op) {
    return parse_equation(kFigureEquation, op);
}

inline CoveredEquation worked_eq() { return parse_equation(kWorkedEquation, differential_op()); }

inline PuiseuxPoly worked_solution() { return parse_series(kWorkedSolution); }

} // namespace puiseux::testing

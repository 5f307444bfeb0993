#pragma once

#include "puiseux/equation.hpp"

#include <random>

namespace puiseux {

// f(x,y) = prod over n-th roots of unity of (y - s(zeta x^{1/n})), expanded
// symbolically; integer x-exponents, monic of degree n in y, f(x, s(x)) = 0.
XYPoly branch_minimal_polynomial(const PuiseuxPoly& s);

// P = f_x + f_y y1 for f the minimal polynomial of the branch; 1-covered,
// with s a solution by implicit differentiation.
CoveredEquation gen_differential_from_branch(const PuiseuxPoly& s);

// A := -B (sigma(s) + e (y - s)) + D (y - s), so that A + B sigma(y) kills s.
// The whole equation is scaled by a power of x when sigma(s) has negative
// exponents, which changes nothing about its solutions.
CoveredEquation gen_covered_with_solution(const PuiseuxPoly& s, const XYPoly& b, const XYPoly& d,
                                          const PuiseuxPoly& e, const OperatorSpec& op);

struct CorpusSpec {
    unsigned long long seed = 0;
    long long genus_bound = 3;
    long long ramification_bound = 12;
    std::vector<Rat> coefficient_pool = {Rat(1), Rat(-1), Rat(2),  Rat(-2),
                                         Rat(3), Rat(1, 2), Rat(-3, 2)};
    OpKind op_kind = OpKind::differential;
    bool order_at_least_one = true;
    int filler_terms = 1;
};

// Deterministic in its CorpusSpec; characteristic_data round-trips the factors.
PuiseuxPoly gen_random_branch(const CorpusSpec& spec);
// Same with the factor sequence pinned.
PuiseuxPoly gen_random_branch(const CorpusSpec& spec, const std::vector<long long>& factors);

// n-th cyclotomic polynomial over the rationals
Poly cyclotomic(long long n);

} // namespace puiseux

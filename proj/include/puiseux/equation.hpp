#pragma once

#include "puiseux/operator.hpp"
#include "puiseux/xypoly.hpp"

#include <vector>

namespace puiseux {

struct CloudPoint {
    Rat iota;
    long long j = 0;
    bool from_a = false;
    bool from_b = false;
};

// P = A(x,y) + B(x,y) y1. A is stored raw; B is stored in the shifted
// indexing: a raw monomial b x^i y^j y1 sits at (i - o_sigma, j + 1), which
// makes cloud, polygon and initial polynomials read uniformly for both
// operators.
class CoveredEquation {
  public:
    CoveredEquation() = default;
    static CoveredEquation from_raw(const OperatorSpec& op, const XYPoly& a, const XYPoly& b_raw);
    static CoveredEquation from_shifted(const OperatorSpec& op, const XYPoly& a,
                                        const XYPoly& b_shifted);

    const OperatorSpec& op() const { return op_; }
    const XYPoly& a() const { return a_; }
    const XYPoly& b_shifted() const { return b_; }
    XYPoly b_raw() const;

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    // m such that the equation is m-covered
    long long ramification() const;
    // combined coefficient access in shifted coordinates
    Scalar a_at(const Rat& iota, long long j) const { return a_.coeff(iota, j); }
    Scalar b_at(const Rat& iota, long long j) const { return b_.coeff(iota, j); }

    std::vector<CloudPoint> cloud() const;

    // multiplicity at the origin: min of ord A, ord B over raw supports
    Rat nu0() const;

    // A(x, s(x)) + B(x, s(x)) sigma(s(x))
    PuiseuxPoly residual(const PuiseuxPoly& s) const;

    std::string str() const;

  private:
    OperatorSpec op_;
    XYPoly a_;
    XYPoly b_; // shifted
};

struct ValidationReport {
    bool a00_zero = true;
    bool b00_zero = true;
    std::vector<std::string> warnings;
    bool clean() const { return warnings.empty(); }
};

// A(0,0) = B(0,0) = 0 is the covered-equation normalization; violations are
// warnings, not errors (the sharp q-difference example violates it).
ValidationReport validate_covered(const CoveredEquation& p);

// P(x, y + c x^{k/n}, y1 + sigma(c x^{k/n})), expanded exactly.
CoveredEquation substitute(const CoveredEquation& p, const Scalar& c, long long k, long long n);

// Same substitution with a formal parameter C in place of c.
class ParamEquation {
  public:
    OperatorSpec op;
    std::map<XYKey, Poly> a;
    std::map<XYKey, Poly> b; // shifted indexing

    Poly a_at(const Rat& iota, long long j) const;
    Poly b_at(const Rat& iota, long long j) const;
    CoveredEquation eval(const Scalar& c) const;
};

ParamEquation substitute_parametric(const CoveredEquation& p, long long k, long long n);

CoveredEquation to_numeric(const CoveredEquation& p);
PuiseuxPoly to_numeric(const PuiseuxPoly& s);

} // namespace puiseux

#pragma once

#include "puiseux/poly.hpp"
#include "puiseux/scalar.hpp"
#include "puiseux/series.hpp"

#include <map>

namespace puiseux {

struct XYKey {
    Rat i;       // x-exponent, rational; negative only in shifted indexing
    long long j; // y-exponent
    bool operator<(const XYKey& o) const {
        if (i != o.i)
            return i < o.i;
        return j < o.j;
    }
    bool operator==(const XYKey& o) const { return i == o.i && j == o.j; }
};

// Sparse polynomial in x^(1/m) and y over Scalar.
class XYPoly {
  public:
    XYPoly() = default;
    static XYPoly monomial(const Scalar& c, const Rat& i, long long j);
    static XYPoly constant(const Scalar& c) { return monomial(c, Rat(0), 0); }
    static XYPoly from_series(const PuiseuxPoly& s); // y-degree 0 image

    bool is_zero() const { return t_.empty(); }
    const std::map<XYKey, Scalar>& terms() const { return t_; }
    Scalar coeff(const Rat& i, long long j) const;
    void add(const Rat& i, long long j, const Scalar& c);

    XYPoly operator-() const;
    friend XYPoly operator+(const XYPoly& a, const XYPoly& b);
    friend XYPoly operator-(const XYPoly& a, const XYPoly& b);
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
    XYPoly operator*(const Scalar& c) const;
    bool operator==(const XYPoly& o) const;

    XYPoly dx() const;
    XYPoly dy() const;
    XYPoly pow(long long e) const;

    // minimal ord_(x,y): min over terms of i + j; requires nonzero
    Rat origin_order() const;
    long long y_degree() const;
    // least r >= 1 with all x-exponents in (1/r)Z
    long long grid_denominator() const;
    bool integer_exponents() const { return grid_denominator() == 1; }

    // y := s(x)
    PuiseuxPoly eval_y(const PuiseuxPoly& s) const;
    // (x, y) := (a x + b y, c x + d y); requires integer exponents
    XYPoly linear_change(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

    std::string str(const std::string& yname = "y") const;

    // every coefficient pushed into the numeric backend
    XYPoly to_numeric() const;

  private:
    std::map<XYKey, Scalar> t_;
};

Int binomial(long long n, long long k);

} // namespace puiseux

#pragma once

#include "puiseux/scalar.hpp"

#include <vector>

namespace puiseux {

// Dense univariate polynomial over Scalar (the variable is C throughout).
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(const Scalar& c) { return Poly({c}); }
    static Poly monomial(const Scalar& c, long long deg);

    long long degree() const { return static_cast<long long>(c_.size()) - 1; } // -1 if zero
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(long long i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar lead() const;

    Scalar eval(const Scalar& x) const;
    Poly derivative() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Scalar& s) const;
    bool operator==(const Poly& o) const;

    // exact division by (C - r); requires r to be a root
    Poly deflate(const Scalar& r) const;
    // multiplicity of r as a root (0 if not a root)
    int root_multiplicity(const Scalar& r) const;

    std::string str() const;

  private:
    void normalize();
    std::vector<Scalar> c_; // c_[i] * C^i
};

struct RootResult {
    std::vector<std::pair<Scalar, int>> roots; // deterministic order, with multiplicity
    Poly unsolved = Poly::constant(Scalar(1)); // exact-mode leftover factor
    bool complete() const { return unsolved.degree() <= 0; }
    long long total_multiplicity() const;
};

// Exact coefficients: rational-root search after content removal, then the
// quadratic formula; leftover factors of degree >= 3 are returned unsolved.
// Any numeric coefficient switches to the simultaneous-iteration finder with
// residual certification |poly(z)| < eps * max|coeff|.
RootResult find_roots(const Poly& p);
RootResult find_roots_numeric(const Poly& p);

// field division: a = q*b + r with deg r < deg b
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// monic gcd over the coefficient field
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace puiseux

#pragma once

#include "puiseux/operator.hpp"
#include "puiseux/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace puiseux {

// Finite-support series sum a_i x^{i/n}. No zero coefficients are stored.
// Negative indices can appear transiently (image of d/dx); solution series
// always have positive support.
class PuiseuxPoly {
  public:
    PuiseuxPoly() = default;
    explicit PuiseuxPoly(long long ramification) : n_(ramification) {
        if (ramification <= 0)
            throw scalar_error("ramification must be positive");
    }
    static PuiseuxPoly monomial(const Scalar& c, long long i, long long n);

    long long ramification() const { return n_; }
    const std::map<long long, Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(long long i) const;
    void set_coeff(long long i, const Scalar& v);

    // smallest exponent with nonzero coefficient; nullopt encodes +infinity
    std::optional<Rat> order() const;
    // largest support index (requires nonzero)
    long long top_index() const;

    // sum over 0 < i <= k of a_i x^{i/n}; truncate(0) == 0
    PuiseuxPoly truncate(long long k) const;
    // minimal ramification presentation
    PuiseuxPoly reduce() const;
    // same series over a coarser grid step 1/m, m a multiple of every
    // support denominator
    PuiseuxPoly with_ramification(long long m) const;

    PuiseuxPoly operator-() const;
    friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
    PuiseuxPoly operator*(const Scalar& c) const;
    PuiseuxPoly pow(long long e) const;
    bool operator==(const PuiseuxPoly& o) const;

    // series literal, e.g. "- x - sqrt(11)*x^(3/2) - (121/30)*x^2"
    std::string str() const;

  private:
    long long n_ = 1;
    std::map<long long, Scalar> c_;
};

// term-wise image under sigma; differential shifts every exponent down by 1
PuiseuxPoly sigma_apply(const PuiseuxPoly& s, const OperatorSpec& op);

struct CharacteristicData {
    long long genus = 0;
    std::vector<long long> exponents; // e_1..e_g, indices on the 1/n grid
    std::vector<long long> factors;   // r_1..r_g, product == n
    std::vector<long long> p;         // p_1..p_g, gcd(p_i, r_i) == 1
};

// Runs the exponent-lattice refinement recurrence on a reduced nonzero series.
CharacteristicData characteristic_data(const PuiseuxPoly& s);

// rho_k: the factor r_l when k == e_l, else 1
long long factor_for_index(const CharacteristicData& cd, long long k);

long long lcm_ll(long long a, long long b);
long long gcd_ll(long long a, long long b);

} // namespace puiseux

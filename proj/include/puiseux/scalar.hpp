#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace puiseux {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float; // dynamic working precision

struct scalar_error : std::runtime_error {
    explicit scalar_error(const std::string& what) : std::runtime_error(what) {}
};

// Session-wide numeric configuration. Precision and zero threshold are set
// explicitly (CLI --precision / --epsilon); defaults are 256 bits and 2^-128.
namespace numeric {
void set_precision_bits(unsigned bits);
unsigned precision_bits();
void set_epsilon_log2(int log2_eps);
int epsilon_log2();
Real epsilon();
} // namespace numeric

// a + b*sqrt(d), d squarefree and not 0 or 1, b != 0 after normalization.
struct Quad {
    Rat a;
    Rat b;
    Int d;
};

struct Cplx {
    Real re;
    Real im;
};

// One coefficient value. Backends: exact rational, quadratic extension
// Q(sqrt(d)) with one d per arithmetic mix, or arbitrary-precision complex.
class Scalar {
  public:
    Scalar() : v_(Rat(0)) {}
    Scalar(int n) : v_(Rat(n)) {}
    Scalar(long n) : v_(Rat(n)) {}
    Scalar(long long n) : v_(Rat((long)n)) {}
    Scalar(const Int& n) : v_(Rat(n)) {}
    Scalar(const Rat& r) : v_(r) {}
    static Scalar rational(const Rat& r) { return Scalar(r); }
    static Scalar quadratic(const Rat& a, const Rat& b, const Int& d);
    static Scalar complex(const Real& re, const Real& im);
    static Scalar complex(const Cplx& z) { return complex(z.re, z.im); }
    // Exact square root of an integer: m*sqrt(d) with d squarefree.
    static Scalar sqrt_of_int(const Int& n);

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_quadratic() const { return std::holds_alternative<Quad>(v_); }
    bool is_numeric() const { return std::holds_alternative<Cplx>(v_); }
    bool is_exact() const { return !is_numeric(); }

    const Rat& rat() const;
    const Quad& quad() const;
    const Cplx& cplx() const;

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }

    Scalar operator-() const;
    Scalar inv() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    // Semantic equality: exact when both operands are exact, within the
    // configured epsilon when a numeric operand is involved.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar pow(long long e) const;

    // Exact square root within the rational/quadratic tower, if it exists
    // there; nullopt means the root needs a bigger field.
    std::optional<Scalar> sqrt_exact() const;
    // Principal square root in the numeric backend.
    Scalar sqrt_numeric() const;

    Cplx to_cplx() const;
    Scalar to_numeric() const { return complex(to_cplx()); }
    Real abs_numeric() const;

    // (re, im) approximation used for deterministic ordering of root lists.
    std::pair<Real, Real> sort_key() const;

    std::string str() const;

  private:
    explicit Scalar(Quad q) : v_(std::move(q)) {}
    explicit Scalar(Cplx z) : v_(std::move(z)) {}
    std::variant<Rat, Quad, Cplx> v_;
};

// n = square * squarefree; returns (square root part, squarefree part).
// Sign of n goes to the squarefree part.
std::pair<Int, Int> squarefree_decompose(const Int& n);

// Exact square root of a rational as m or m*sqrt(d).
Scalar sqrt_of_rat(const Rat& r);

// Deterministic total order for sorting scalar lists.
bool scalar_sort_less(const Scalar& x, const Scalar& y);

std::string rat_str(const Rat& r);

} // namespace puiseux

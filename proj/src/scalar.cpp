#include "puiseux/scalar.hpp"

#include <cmath>
#include <sstream>

namespace puiseux {

namespace numeric {

namespace {
struct Config {
    unsigned bits = 256;
    int log2_eps = -128;
    Config() { apply(); }
    void apply() const {
        // boost mpfr_float counts decimal digits
        unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 3;
        Real::default_precision(digits10);
    }
};
Config& config() {
    static Config c;
    return c;
}
} // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 24 || bits > 16384)
        throw scalar_error("precision out of range [24, 16384] bits");
    config().bits = bits;
    config().apply();
}

unsigned precision_bits() { return config().bits; }

void set_epsilon_log2(int log2_eps) {
    if (log2_eps >= 0)
        throw scalar_error("epsilon must be < 1");
    config().log2_eps = log2_eps;
}

int epsilon_log2() { return config().log2_eps; }

Real epsilon() {
    (void)config();
    return boost::multiprecision::ldexp(Real(1), config().log2_eps);
}

} // namespace numeric

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n == 0)
        return {1, 0};
    Int m = boost::multiprecision::abs(n);
    Int root = 1, free = 1;
    for (Int p = 2; p * p * p <= m && p < 100000; p = (p == 2 ? Int(3) : p + 2)) {
        if (m % p != 0)
            continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i)
            root *= p;
        if (e % 2)
            free *= p;
    }
    // leftover cofactor: either a perfect square, p, p^2 (p prime) or
    // a product of two primes; only the full-square case folds into root
    Int s = boost::multiprecision::sqrt(m);
    if (s * s == m)
        root *= s;
    else
        free *= m;
    if (n < 0)
        free = -free;
    return {root, free};
}

Scalar sqrt_of_rat(const Rat& r) {
    if (r == 0)
        return Scalar(0);
    // sqrt(p/q) = sqrt(p*q)/q
    Int p = boost::multiprecision::numerator(r);
    Int q = boost::multiprecision::denominator(r);
    auto [root, free] = squarefree_decompose(p * q);
    if (free == 1)
        return Scalar(Rat(root, q));
    return Scalar::quadratic(Rat(0), Rat(root, q), free);
}

Scalar Scalar::sqrt_of_int(const Int& n) { return sqrt_of_rat(Rat(n)); }

Scalar Scalar::quadratic(const Rat& a, const Rat& b, const Int& d) {
    if (d == 0 || d == 1)
        return Scalar(a + b * Rat(d == 0 ? 0 : 1));
    if (b == 0)
        return Scalar(a);
    auto [root, free] = squarefree_decompose(d);
    if (free == 1)
        return Scalar(a + b * Rat(root));
    return Scalar(Quad{a, b * Rat(root), free});
}

Scalar Scalar::complex(const Real& re, const Real& im) { return Scalar(Cplx{re, im}); }

const Rat& Scalar::rat() const {
    if (!is_rational())
        throw scalar_error("scalar is not rational");
    return std::get<Rat>(v_);
}

const Quad& Scalar::quad() const {
    if (!is_quadratic())
        throw scalar_error("scalar is not quadratic");
    return std::get<Quad>(v_);
}

const Cplx& Scalar::cplx() const {
    if (!is_numeric())
        throw scalar_error("scalar is not numeric");
    return std::get<Cplx>(v_);
}

bool Scalar::is_zero() const {
    if (is_rational())
        return rat() == 0;
    if (is_quadratic())
        return false; // normalized: b != 0
    const Cplx& z = cplx();
    Real eps = numeric::epsilon();
    using boost::multiprecision::abs;
    return abs(z.re) < eps && abs(z.im) < eps;
}

Cplx Scalar::to_cplx() const {
    if (is_rational())
        return {Real(rat()), Real(0)};
    if (is_quadratic()) {
        const Quad& q = quad();
        Real root = boost::multiprecision::sqrt(Real(boost::multiprecision::abs(q.d)));
        if (q.d > 0)
            return {Real(q.a) + Real(q.b) * root, Real(0)};
        return {Real(q.a), Real(q.b) * root};
    }
    return cplx();
}

Real Scalar::abs_numeric() const {
    Cplx z = to_cplx();
    return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

std::pair<Real, Real> Scalar::sort_key() const {
    Cplx z = to_cplx();
    return {z.re, z.im};
}

bool scalar_sort_less(const Scalar& x, const Scalar& y) {
    auto kx = x.sort_key(), ky = y.sort_key();
    if (kx.first != ky.first)
        return kx.first < ky.first;
    return kx.second < ky.second;
}

Scalar Scalar::operator-() const {
    if (is_rational())
        return Scalar(Rat(-rat()));
    if (is_quadratic()) {
        const Quad& q = quad();
        return Scalar(Quad{-q.a, -q.b, q.d});
    }
    const Cplx& z = cplx();
    return Scalar(Cplx{-z.re, -z.im});
}

Scalar Scalar::inv() const {
    if (is_rational()) {
        if (rat() == 0)
            throw scalar_error("division by zero");
        return Scalar(Rat(1) / rat());
    }
    if (is_quadratic()) {
        const Quad& q = quad();
        Rat norm = q.a * q.a - q.b * q.b * Rat(q.d);
        if (norm == 0)
            throw scalar_error("division by zero in Q(sqrt(d))");
        return Scalar(Quad{q.a / norm, -q.b / norm, q.d});
    }
    const Cplx& z = cplx();
    Real norm = z.re * z.re + z.im * z.im;
    if (norm == 0)
        throw scalar_error("division by numeric zero");
    return Scalar(Cplx{z.re / norm, -z.im / norm});
}

namespace {

Scalar add_quad(const Quad& x, const Quad& y) {
    if (x.d != y.d)
        throw scalar_error("mixing sqrt(" + x.d.str() + ") with sqrt(" + y.d.str() +
                           "); use the numeric backend");
    return Scalar::quadratic(x.a + y.a, x.b + y.b, x.d);
}

Scalar mul_quad(const Quad& x, const Quad& y) {
    if (x.d != y.d)
        throw scalar_error("mixing sqrt(" + x.d.str() + ") with sqrt(" + y.d.str() +
                           "); use the numeric backend");
    return Scalar::quadratic(x.a * y.a + x.b * y.b * Rat(x.d), x.a * y.b + x.b * y.a, x.d);
}

} // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_numeric() || y.is_numeric()) {
        Cplx a = x.to_cplx(), b = y.to_cplx();
        return Scalar::complex(a.re + b.re, a.im + b.im);
    }
    if (x.is_rational() && y.is_rational())
        return Scalar(Rat(x.rat() + y.rat()));
    if (x.is_rational())
        return add_quad(Quad{x.rat(), 0, y.quad().d}, y.quad());
    if (y.is_rational())
        return add_quad(x.quad(), Quad{y.rat(), 0, x.quad().d});
    return add_quad(x.quad(), y.quad());
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_numeric() || y.is_numeric()) {
        Cplx a = x.to_cplx(), b = y.to_cplx();
        return Scalar::complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    if (x.is_rational() && y.is_rational())
        return Scalar(Rat(x.rat() * y.rat()));
    if (x.is_rational())
        return Scalar::quadratic(x.rat() * y.quad().a, x.rat() * y.quad().b, y.quad().d);
    if (y.is_rational())
        return Scalar::quadratic(y.rat() * x.quad().a, y.rat() * x.quad().b, x.quad().d);
    return mul_quad(x.quad(), y.quad());
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

bool Scalar::operator==(const Scalar& o) const {
    if (is_exact() && o.is_exact()) {
        if (is_rational() != o.is_rational())
            return false;
        if (is_rational())
            return rat() == o.rat();
        const Quad& a = quad();
        const Quad& b = o.quad();
        return a.d == b.d && a.a == b.a && a.b == b.b;
    }
    return (*this - o).is_zero();
}

Scalar Scalar::pow(long long e) const {
    if (e == 0)
        return Scalar(1);
    if (e < 0)
        return inv().pow(-e);
    Scalar base = *this, acc = Scalar(1);
    long long n = e;
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::optional<Scalar> Scalar::sqrt_exact() const {
    if (is_numeric())
        return std::nullopt;
    if (is_rational()) {
        if (rat() == 0)
            return Scalar(0);
        return sqrt_of_rat(rat());
    }
    // sqrt(a + b*sqrt(d)) = u + v*sqrt(d) needs a^2 - b^2 d to be a rational
    // square s^2 and (a+s)/2 or (a-s)/2 a rational square.
    const Quad& q = quad();
    Rat n2 = q.a * q.a - q.b * q.b * Rat(q.d);
    if (n2 < 0)
        return std::nullopt;
    Scalar s = sqrt_of_rat(n2);
    if (!s.is_rational())
        return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rat u2 = (q.a + (sign ? -s.rat() : s.rat())) / 2;
        if (u2 < 0)
            continue;
        Scalar u = sqrt_of_rat(u2);
        if (!u.is_rational() || u.rat() == 0)
            continue;
        Rat v = q.b / (2 * u.rat());
        Scalar cand = Scalar::quadratic(u.rat(), v, q.d);
        if (cand * cand == *this)
            return cand;
    }
    return std::nullopt;
}

Scalar Scalar::sqrt_numeric() const {
    Cplx z = to_cplx();
    using boost::multiprecision::sqrt;
    Real r = boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
    if (r == 0)
        return Scalar::complex(Real(0), Real(0));
    Real u = sqrt((r + z.re) / 2);
    Real v = sqrt((r - z.re) / 2);
    if (z.im < 0)
        v = -v;
    return Scalar::complex(u, v);
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string Scalar::str() const {
    if (is_rational())
        return rat_str(rat());
    if (is_quadratic()) {
        const Quad& q = quad();
        std::ostringstream os;
        bool printed = false;
        if (q.a != 0) {
            os << q.a;
            printed = true;
        }
        Rat b = q.b;
        if (printed)
            os << (b > 0 ? "+" : "-");
        else if (b < 0)
            os << "-";
        Rat ab = b < 0 ? Rat(-b) : b;
        if (ab != 1)
            os << ab << "*";
        os << "sqrt(" << q.d << ")";
        return os.str();
    }
    const Cplx& z = cplx();
    std::ostringstream os;
    os.precision(static_cast<int>(numeric::precision_bits() * 0.30103));
    os << z.re;
    if (z.im != 0) {
        os << (z.im < 0 ? "-" : "+") << boost::multiprecision::abs(z.im) << "*i";
    }
    return os.str();
}

} // namespace puiseux

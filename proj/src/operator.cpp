#include "puiseux/operator.hpp"

namespace puiseux {

OperatorSpec differential_op() { return OperatorSpec{}; }

OperatorSpec q_difference_op(const Scalar& q) {
    if (q.is_zero())
        throw scalar_error("q must be nonzero");
    if (q.abs_numeric() == 1)
        throw scalar_error("q-difference operator requires |q| != 1");
    OperatorSpec op;
    op.kind = OpKind::q_difference;
    op.q = q;
    return op;
}

OperatorSpec q_difference_op(const Scalar& q, const Scalar& q_root, long long root_den) {
    OperatorSpec op = q_difference_op(q);
    if (root_den <= 0)
        throw scalar_error("root_den must be positive");
    if (q_root.pow(root_den) != q)
        throw scalar_error("q_root^root_den != q");
    op.q_root = q_root;
    op.root_den = root_den;
    return op;
}

namespace {

// exact b-th root of a rational, if it is one
std::optional<Rat> perfect_root(const Rat& r, long long b) {
    if (r == 0)
        return Rat(0);
    Int p = boost::multiprecision::numerator(r);
    Int q = boost::multiprecision::denominator(r);
    bool neg = p < 0;
    if (neg && b % 2 == 0)
        return std::nullopt;
    Int ap = boost::multiprecision::abs(p);
    Int rp, rq;
    mpz_t t;
    mpz_init(t);
    int exact_p = mpz_root(t, ap.backend().data(), static_cast<unsigned long>(b));
    rp = Int(t);
    int exact_q = mpz_root(t, q.backend().data(), static_cast<unsigned long>(b));
    rq = Int(t);
    mpz_clear(t);
    if (!exact_p || !exact_q)
        return std::nullopt;
    Rat out(rp, rq);
    return neg ? Rat(-out) : out;
}

Scalar principal_power_numeric(const Scalar& q, const Rat& mu) {
    Cplx z = q.to_cplx();
    using namespace boost::multiprecision;
    Real mod2 = z.re * z.re + z.im * z.im;
    if (mod2 == 0)
        throw scalar_error("0^mu undefined");
    Real lre = log(mod2) / 2;
    Real lim = atan2(z.im, z.re);
    Real m(mu);
    Real wre = m * lre, wim = m * lim;
    Real e = exp(wre);
    return Scalar::complex(e * cos(wim), e * sin(wim));
}

} // namespace

Scalar q_power(const OperatorSpec& op, const Rat& mu) {
    Int a = boost::multiprecision::numerator(mu);
    Int b = boost::multiprecision::denominator(mu);
    if (b == 1)
        return op.q.pow(static_cast<long long>(a));
    if (op.root_den > 0) {
        Int k = a * op.root_den;
        if (k % b == 0)
            return op.q_root.pow(static_cast<long long>(k / b));
    }
    if (op.q.is_rational()) {
        long long bb = static_cast<long long>(b);
        Rat qa = op.q.rat();
        Scalar base = Scalar(qa).pow(static_cast<long long>(a));
        if (auto pr = perfect_root(base.rat(), bb))
            return Scalar(*pr);
        if (bb % 2 == 0) {
            // pull out one square root; the inner exponent has half the denominator
            Scalar inner = q_power(op, Rat(a * 2, b));
            if (inner.is_exact()) {
                bool nonneg = inner.is_quadratic()
                                  ? (inner.quad().d > 0 && inner.to_cplx().re >= 0)
                                  : inner.rat() >= 0;
                if (nonneg) {
                    if (auto s = inner.sqrt_exact())
                        return *s;
                } else if (inner.is_rational()) {
                    return sqrt_of_rat(inner.rat()); // i*sqrt(|r|), principal
                }
            }
        }
    }
    return principal_power_numeric(op.q, mu);
}

Scalar delta_coeff(const OperatorSpec& op, const Rat& mu) {
    if (op.is_differential())
        return Scalar(mu);
    return q_power(op, mu);
}

} // namespace puiseux

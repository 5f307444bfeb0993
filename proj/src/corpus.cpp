#include "puiseux/corpus.hpp"

#include <array>
#include <map>

namespace puiseux {

Poly cyclotomic(long long n) {
    // (z^n - 1) / prod of cyclotomic(d) over proper divisors d
    std::vector<Scalar> zn(static_cast<size_t>(n) + 1, Scalar(0));
    zn[0] = Scalar(-1);
    zn.back() = Scalar(1);
    Poly num(std::move(zn));
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        Poly cd = cyclotomic(d);
        // exact monic division
        std::vector<Scalar> q(static_cast<size_t>(num.degree() - cd.degree()) + 1, Scalar(0));
        Poly rem = num;
        for (long long i = num.degree() - cd.degree(); i >= 0; --i) {
            Scalar c = rem.coeff(i + cd.degree());
            if (c.is_zero())
                continue;
            q[static_cast<size_t>(i)] = c;
            rem = rem - Poly::monomial(c, i) * cd;
        }
        if (!rem.is_zero())
            throw scalar_error("cyclotomic division left a remainder");
        num = Poly(std::move(q));
    }
    return num;
}

namespace {

using ZuyKey = std::array<long long, 3>; // z, u, y exponents
using ZuyPoly = std::map<ZuyKey, Scalar>;

void zuy_add(ZuyPoly& p, const ZuyKey& k, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = p.find(k);
    if (it == p.end()) {
        p.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        p.erase(it);
}

// product with z-exponents reduced modulo z^n = 1
ZuyPoly zuy_mul(const ZuyPoly& a, const ZuyPoly& b, long long n) {
    ZuyPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            zuy_add(out, {(ka[0] + kb[0]) % n, ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return out;
}

} // namespace

XYPoly branch_minimal_polynomial(const PuiseuxPoly& s_in) {
    PuiseuxPoly s = s_in.reduce();
    long long n = s.is_zero() ? 1 : s.ramification();
    if (n == 1)
        return XYPoly::monomial(Scalar(1), Rat(0), 1) - XYPoly::from_series(s);

    ZuyPoly prod{{ZuyKey{0, 0, 0}, Scalar(1)}};
    for (long long j = 0; j < n; ++j) {
        ZuyPoly factor{{ZuyKey{0, 0, 1}, Scalar(1)}};
        for (const auto& [i, a] : s.coeffs()) {
            if (i < 0)
                throw scalar_error("branch must have nonnegative exponents");
            zuy_add(factor, {(i * j) % n, i, 0}, -a);
        }
        prod = zuy_mul(prod, factor, n);
    }

    // reduce modulo the n-th cyclotomic polynomial in z; the symmetrized
    // product must come out z-free
    Poly cyc = cyclotomic(n);
    long long cd = cyc.degree();
    std::map<ZuyKey, Scalar> work(prod.begin(), prod.end());
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (auto it = work.rbegin(); it != work.rend(); ++it) {
            if (it->first[0] >= cd) {
                ZuyKey k = it->first;
                Scalar c = it->second;
                for (long long t = 0; t <= cd; ++t)
                    zuy_add(work, {k[0] - cd + t, k[1], k[2]}, -c * cyc.coeff(t));
                reduced = true;
                break;
            }
        }
    }

    XYPoly out;
    for (const auto& [k, c] : work) {
        if (k[0] != 0)
            throw scalar_error("cyclotomic reduction left a z-dependence");
        if (k[1] % n != 0)
            throw scalar_error("symmetrized product has a fractional exponent");
        out.add(Rat(k[1] / n), k[2], c);
    }
    return out;
}

CoveredEquation gen_differential_from_branch(const PuiseuxPoly& s) {
    XYPoly f = branch_minimal_polynomial(s);
    return CoveredEquation::from_raw(differential_op(), f.dx(), f.dy());
}

CoveredEquation gen_covered_with_solution(const PuiseuxPoly& s, const XYPoly& b, const XYPoly& d,
                                          const PuiseuxPoly& e, const OperatorSpec& op) {
    if (b.is_zero())
        throw scalar_error("B must not vanish identically");
    XYPoly ymins = XYPoly::monomial(Scalar(1), Rat(0), 1) - XYPoly::from_series(s);
    XYPoly sig = XYPoly::from_series(sigma_apply(s, op));
    XYPoly a = -(b * (sig + XYPoly::from_series(e) * ymins)) + d * ymins;
    // clear any negative exponent from sigma by scaling the whole equation
    Rat shift(0);
    for (const auto& [k, v] : a.terms())
        shift = std::min(shift, k.i);
    for (const auto& [k, v] : b.terms())
        shift = std::min(shift, k.i);
    XYPoly a2 = a, b2 = b;
    if (shift < 0) {
        XYPoly mono = XYPoly::monomial(Scalar(1), -shift, 0);
        a2 = a2 * mono;
        b2 = b2 * mono;
    }
    return CoveredEquation::from_raw(op, a2, b2);
}

PuiseuxPoly gen_random_branch(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<long long> factors;
    long long g = static_cast<long long>(rng() % (spec.genus_bound + 1));
    long long prod = 1;
    for (long long i = 0; i < g; ++i) {
        long long r = 2 + static_cast<long long>(rng() % 2);
        if (prod * r > spec.ramification_bound)
            break;
        factors.push_back(r);
        prod *= r;
    }
    return gen_random_branch(spec, factors);
}

PuiseuxPoly gen_random_branch(const CorpusSpec& spec, const std::vector<long long>& factors) {
    std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ull + 1);
    long long n = 1;
    for (long long r : factors) {
        if (r < 2)
            throw scalar_error("characteristic factors must be >= 2");
        n *= r;
    }
    if (n > spec.ramification_bound)
        throw scalar_error("factors exceed the ramification bound");
    const auto& pool = spec.coefficient_pool;
    auto coeff = [&]() { return Scalar(pool[rng() % pool.size()]); };

    PuiseuxPoly s(n);
    long long last = spec.order_at_least_one ? 0 : -n / 2;
    // optional leading terms on the coarse grid
    long long lead = static_cast<long long>(rng() % 2);
    for (long long t = 0; t < lead; ++t) {
        last += n * (1 + static_cast<long long>(rng() % 2));
        s.set_coeff(last, coeff());
    }
    long long cur = 1; // r_1 ... r_i
    for (size_t i = 0; i < factors.size(); ++i) {
        long long r = factors[i];
        long long step = n / (cur * r); // e must be a multiple of this
        // p coprime to r, e = p * step > last, and e >= n on the first term
        // when the order is pinned at >= 1
        long long floor_e = std::max(last + 1, (i == 0 && spec.order_at_least_one) ? n : 1LL);
        long long p = floor_e / step + 1 + static_cast<long long>(rng() % 3);
        while (gcd_ll(p % r, r) != 1 || p * step <= last)
            ++p;
        long long e = p * step;
        cur *= r;
        s.set_coeff(e, coeff());
        last = e;
        // filler terms on the refined grid before the next refinement
        for (int f = 0; f < spec.filler_terms && (rng() % 2); ++f) {
            long long fill = last + (n / cur) * (1 + static_cast<long long>(rng() % 2));
            s.set_coeff(fill, coeff());
            last = fill;
        }
    }
    if (factors.empty()) {
        // genus 0: plain integer exponents
        long long terms = 1 + static_cast<long long>(rng() % 3);
        for (long long t = 0; t < terms; ++t) {
            last += 1 + static_cast<long long>(rng() % 3);
            s.set_coeff(last, coeff());
        }
    }
    return s.reduce();
}

} // namespace puiseux

#include "puiseux/poly.hpp"

#include <algorithm>
#include <map>

namespace puiseux {

namespace {

// --- exact helpers ---------------------------------------------------------

std::vector<std::pair<Int, int>> trial_factor(Int n, bool& fully_factored) {
    std::vector<std::pair<Int, int>> out;
    fully_factored = true;
    n = boost::multiprecision::abs(n);
    for (Int p = 2; p * p <= n && p < 1000000; p = (p == 2 ? Int(3) : p + 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
        if (n >= 1000000ul * 1000000ul)
            fully_factored = false; // cofactor may be composite
    }
    return out;
}

constexpr size_t kMaxDivisors = 20000;

bool enumerate_divisors(const Int& n, std::vector<Int>& out) {
    bool full = true;
    auto f = trial_factor(n, full);
    out = {Int(1)};
    for (const auto& [p, e] : f) {
        size_t base = out.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * pk);
                if (out.size() > kMaxDivisors)
                    return false;
            }
        }
    }
    return full;
}

bool all_rational(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational())
            return false;
    return true;
}

bool all_exact(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_exact())
            return false;
    return true;
}

// primitive integer version of a rational-coefficient polynomial
std::vector<Int> integerize(const Poly& p) {
    Int l = 1;
    for (const auto& c : p.coeffs())
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.rat()));
    std::vector<Int> v;
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Rat r = c.rat() * Rat(l);
        v.push_back(boost::multiprecision::numerator(r));
        g = boost::multiprecision::gcd(g, v.back());
    }
    if (g > 1)
        for (auto& x : v)
            x /= g;
    return v;
}

// conjugate over Q(sqrt(d)): a + b sqrt(d) -> a - b sqrt(d)
Poly conj_poly(const Poly& p) {
    std::vector<Scalar> v;
    for (const auto& c : p.coeffs()) {
        if (c.is_quadratic())
            v.push_back(Scalar::quadratic(c.quad().a, -c.quad().b, c.quad().d));
        else
            v.push_back(c);
    }
    return Poly(std::move(v));
}

// deflate all occurrences of candidate rational roots drawn from cands
void deflate_candidates(Poly& p, const std::vector<Rat>& cands,
                        std::vector<std::pair<Scalar, int>>& roots) {
    for (const Rat& r : cands) {
        if (p.degree() < 1)
            break;
        Scalar s{r};
        int m = 0;
        while (p.degree() >= 1 && p.eval(s).is_zero()) {
            p = p.deflate(s);
            ++m;
        }
        if (m > 0)
            roots.emplace_back(s, m);
    }
}

std::vector<Rat> rational_candidates(const std::vector<Int>& ic) {
    std::vector<Rat> cands;
    if (ic.empty())
        return cands;
    std::vector<Int> ps, qs;
    if (!enumerate_divisors(ic.front(), ps) || !enumerate_divisors(ic.back(), qs))
        return cands; // too many divisors: give up the exact search
    for (const Int& a : ps)
        for (const Int& b : qs) {
            cands.push_back(Rat(a, b));
            cands.push_back(Rat(-a, b));
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

void solve_quadratic(Poly& p, std::vector<std::pair<Scalar, int>>& roots) {
    Scalar a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Scalar disc = b * b - Scalar(4) * a * c;
    std::optional<Scalar> sq;
    if (disc.is_rational())
        sq = sqrt_of_rat(disc.rat());
    else
        sq = disc.sqrt_exact();
    if (!sq)
        return; // root needs a field beyond one quadratic extension
    Scalar inv2a = (Scalar(2) * a).inv();
    Scalar r1 = (-b + *sq) * inv2a;
    Scalar r2 = (-b - *sq) * inv2a;
    if (r1 == r2) {
        roots.emplace_back(r1, 2);
    } else {
        roots.emplace_back(r1, 1);
        roots.emplace_back(r2, 1);
    }
    p = Poly::constant(Scalar(1));
}

RootResult find_roots_exact(Poly p) {
    RootResult res;
    int zero_mult = 0;
    while (p.degree() >= 1 && p.coeff(0).is_zero()) {
        p = p.deflate(Scalar(0));
        ++zero_mult;
    }
    if (zero_mult)
        res.roots.emplace_back(Scalar(0), zero_mult);

    if (p.degree() >= 1) {
        std::vector<Rat> cands;
        if (all_rational(p)) {
            cands = rational_candidates(integerize(p));
        } else {
            Poly norm = p * conj_poly(p);
            if (all_rational(norm))
                cands = rational_candidates(integerize(norm));
        }
        deflate_candidates(p, cands, res.roots);
    }

    if (p.degree() == 1) {
        res.roots.emplace_back(-p.coeff(0) / p.coeff(1), 1);
        p = Poly::constant(Scalar(1));
    } else if (p.degree() == 2) {
        solve_quadratic(p, res.roots);
    }

    if (p.degree() >= 1)
        res.unsolved = p;
    std::sort(res.roots.begin(), res.roots.end(),
              [](const auto& x, const auto& y) { return scalar_sort_less(x.first, y.first); });
    return res;
}

// --- numeric (Durand-Kerner) -----------------------------------------------

Cplx cadd(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
Cplx csub(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
Cplx cmul(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cplx cdiv(const Cplx& a, const Cplx& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Real cabs(const Cplx& a) { return boost::multiprecision::sqrt(a.re * a.re + a.im * a.im); }

Cplx horner(const std::vector<Cplx>& c, const Cplx& z) {
    Cplx acc{Real(0), Real(0)};
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = cadd(cmul(acc, z), *it);
    return acc;
}

RootResult durand_kerner(const Poly& p_in) {
    RootResult res;
    std::vector<Cplx> c;
    Real maxc(0);
    for (const auto& s : p_in.coeffs()) {
        c.push_back(s.to_cplx());
        maxc = std::max(maxc, cabs(c.back()));
    }
    // trim numerically-zero leading coefficients
    Real eps = numeric::epsilon();
    while (c.size() > 1 && cabs(c.back()) < eps * maxc)
        c.pop_back();
    size_t d = c.size() - 1;
    if (d == 0)
        return res;

    // monic copy for the iteration
    std::vector<Cplx> m(c);
    for (auto& x : m)
        x = cdiv(x, c.back());

    Real radius(1);
    for (size_t i = 0; i < d; ++i)
        radius = std::max(radius, Real(1) + cabs(m[i]));

    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    Real pi = boost::multiprecision::atan(Real(1)) * 4;
    std::vector<Cplx> z(d);
    for (size_t k = 0; k < d; ++k) {
        Real ang = 2 * pi * Real(static_cast<unsigned>(k)) / Real(static_cast<unsigned>(d)) +
                   Real("0.573");
        Real r = radius * (Real("0.55") + Real("0.17") * Real(static_cast<unsigned>(k % 3)));
        z[k] = {r * cos(ang), r * sin(ang)};
    }

    unsigned prec = numeric::precision_bits();
    Real stop = boost::multiprecision::ldexp(Real(1), -static_cast<int>(prec) + 16);
    int maxit = 3000;
    for (int it = 0; it < maxit; ++it) {
        Real step(0);
        for (size_t k = 0; k < d; ++k) {
            Cplx num = horner(m, z[k]);
            Cplx den{Real(1), Real(0)};
            for (size_t j = 0; j < d; ++j)
                if (j != k)
                    den = cmul(den, csub(z[k], z[j]));
            Cplx w = cdiv(num, den);
            z[k] = csub(z[k], w);
            step = std::max(step, cabs(w) / std::max(Real(1), cabs(z[k])));
        }
        if (step < stop)
            break;
    }

    // cluster nearby iterates to recover multiplicities
    std::vector<size_t> idx(d);
    for (size_t i = 0; i < d; ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (z[a].re != z[b].re)
            return z[a].re < z[b].re;
        return z[a].im < z[b].im;
    });
    Real ctol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(prec) / 4);
    std::vector<std::vector<size_t>> clusters;
    for (size_t i : idx) {
        bool merged = false;
        for (auto& cl : clusters) {
            if (cabs(csub(z[cl.front()], z[i])) < ctol * std::max(Real(1), cabs(z[i]))) {
                cl.push_back(i);
                merged = true;
                break;
            }
        }
        if (!merged)
            clusters.push_back({i});
    }

    for (const auto& cl : clusters) {
        Cplx mean{Real(0), Real(0)};
        for (size_t i : cl)
            mean = cadd(mean, z[i]);
        mean = {mean.re / static_cast<unsigned>(cl.size()), mean.im / static_cast<unsigned>(cl.size())};
        Real resid = cabs(horner(c, mean));
        if (!(resid < eps * maxc))
            throw scalar_error("numeric root not certified: |p(z)| = " + resid.str(8, std::ios::scientific));
        res.roots.emplace_back(Scalar::complex(mean), static_cast<int>(cl.size()));
    }
    std::sort(res.roots.begin(), res.roots.end(),
              [](const auto& x, const auto& y) { return scalar_sort_less(x.first, y.first); });
    return res;
}

} // namespace

RootResult find_roots_numeric(const Poly& p) {
    if (p.is_zero())
        throw scalar_error("roots of the zero polynomial");
    return durand_kerner(p);
}

RootResult find_roots(const Poly& p) {
    if (p.is_zero())
        throw scalar_error("roots of the zero polynomial");
    if (all_exact(p))
        return find_roots_exact(p);
    return find_roots_numeric(p);
}

} // namespace puiseux

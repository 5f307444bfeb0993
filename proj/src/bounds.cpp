#include "puiseux/bounds.hpp"

#include "puiseux/solver.hpp"

#include <algorithm>
#include <random>

namespace puiseux {

long long theorem_main_rhs(const std::vector<long long>& factors,
                           const std::vector<long long>& dicritical_indices) {
    long long g = static_cast<long long>(factors.size());
    long long prod = 1;
    for (long long r : factors)
        prod *= r;
    long long rhs = prod;
    long long prev = 0;
    for (long long i : dicritical_indices) {
        if (i < 1 || i > g || i <= prev)
            throw scalar_error("dicritical indices must be strictly increasing in [1, g]");
        prev = i;
        long long upto = 1, before = 1;
        for (long long j = 0; j < i; ++j)
            upto *= factors[static_cast<size_t>(j)];
        for (long long j = 0; j + 1 < i; ++j)
            before *= factors[static_cast<size_t>(j)];
        rhs -= upto - before;
    }
    return rhs;
}

long long corollary_a_rhs(const std::vector<long long>& factors) {
    long long g = static_cast<long long>(factors.size());
    long long a = 1, b = 1;
    for (long long j = 0; j < g - 1; ++j)
        a *= factors[static_cast<size_t>(j)];
    for (long long j = 0; j < g - 2; ++j)
        b *= factors[static_cast<size_t>(j)];
    return a - b;
}

long long theorem_reasonable_rhs(const std::vector<long long>& factors) {
    long long a = 1;
    for (size_t j = 0; j + 1 < factors.size(); ++j)
        a *= factors[j];
    return a;
}

bool genus_log_ok(long long genus, long long h) {
    if (genus <= 1)
        return h >= 1;
    long long bound = 1;
    for (long long i = 1; i < genus; ++i)
        bound *= 2;
    return bound <= h;
}

namespace {

bool real_positive(const Scalar& s) {
    if (s.is_rational())
        return s.rat() > 0;
    if (s.is_quadratic())
        return s.quad().d > 0 && s.to_cplx().re > 0;
    const Cplx& z = s.cplx();
    return boost::multiprecision::abs(z.im) < numeric::epsilon() && z.re > 0;
}

bool abs_less_than_one(const Scalar& q) {
    if (q.is_rational())
        return boost::multiprecision::abs(q.rat()) < 1;
    return q.abs_numeric() < 1;
}

// |q| > bound^n, exact for rational q
bool abs_power_greater(const Scalar& q, long long bound, long long n) {
    Rat rhs(1);
    for (long long i = 0; i < n; ++i)
        rhs *= bound;
    if (q.is_rational())
        return boost::multiprecision::abs(q.rat()) > rhs;
    return q.abs_numeric() > Real(rhs);
}

// chain polynomial: s^t + rho_t s^{t-1} + rho_{t-1} rho_t s^{t-2} + ...
Poly chain_polynomial(const std::vector<long long>& rhos) {
    size_t t = rhos.size();
    std::vector<Scalar> c(t + 1, Scalar(0));
    c[t] = Scalar(1);
    Rat run(1);
    for (size_t i = 1; i <= t; ++i) {
        run *= rhos[t - i];
        c[t - i] = Scalar(run);
    }
    return Poly(std::move(c));
}

} // namespace

ReasonablenessVerdict reasonableness(const OperatorSpec& op, long long n,
                                     const std::vector<long long>& factors, int search_length,
                                     bool declared_transcendental) {
    ReasonablenessVerdict v;
    if (op.is_differential()) {
        v.verdict = Reasonable::reasonable;
        v.basis = "differential equation";
        return v;
    }
    Scalar root = (op.root_den == n && !op.q_root.is_zero()) ? op.q_root
                                                             : q_power(op, Rat(1, n));
    if (real_positive(op.q) && !(op.q == Scalar(1)) && real_positive(root)) {
        v.verdict = Reasonable::reasonable;
        v.basis = "q and the chosen q^(1/n) are positive reals";
        return v;
    }
    if (abs_less_than_one(op.q)) {
        v.verdict = Reasonable::reasonable;
        v.basis = "|q| < 1";
        return v;
    }
    long long maxr = 1;
    for (long long r : factors)
        maxr = std::max(maxr, r);
    if (abs_power_greater(op.q, maxr, n)) {
        v.verdict = Reasonable::reasonable;
        v.basis = "|q|^(1/n) exceeds every characteristic factor";
        return v;
    }
    if (declared_transcendental) {
        v.verdict = Reasonable::reasonable;
        v.basis = "q declared transcendental";
        return v;
    }
    // exhaustive search over rho chains: factors in index order, each at most
    // once, interleaved with 1's, total length <= search_length
    std::vector<long long> rhos;
    std::function<bool(size_t)> dfs = [&](size_t next_factor) -> bool {
        if (!rhos.empty()) {
            Poly p = chain_polynomial(rhos);
            if (p.eval(root).is_zero()) {
                v.verdict = Reasonable::unreasonable;
                v.basis = "q^(1/n) is a root of a residue-chain polynomial";
                v.witness = p;
                v.witness_rhos = rhos;
                return true;
            }
        }
        if (rhos.size() >= static_cast<size_t>(search_length))
            return false;
        rhos.push_back(1);
        if (dfs(next_factor))
            return true;
        rhos.pop_back();
        if (next_factor < factors.size()) {
            rhos.push_back(factors[next_factor]);
            if (dfs(next_factor + 1))
                return true;
            rhos.pop_back();
        }
        return false;
    };
    if (dfs(0))
        return v;
    v.verdict = Reasonable::unknown;
    v.basis = "no Remark criterion applies; chain search exhausted at length " +
              std::to_string(search_length);
    return v;
}

ImproperCheck improper_check(const std::vector<Rat>& u, const Real& tolerance) {
    ImproperCheck out;
    size_t m = u.size();
    if (m == 0)
        return out;
    out.improper = u.back() >= 1;
    for (size_t i = 0; i + 1 < m; ++i)
        out.improper = out.improper && u[i] >= u[i + 1];
    out.improper = out.improper && u.front() > 0;
    if (!out.improper)
        return out;
    out.upper = u.back(); // u_{m-1} / u_m with u_m = 1
    for (size_t i = 0; i + 1 < m; ++i)
        out.upper = std::max(out.upper, Rat(u[i] / u[i + 1]));
    std::vector<Scalar> coeffs;
    for (const Rat& c : u)
        coeffs.push_back(Scalar(c).to_numeric());
    coeffs.push_back(Scalar(1).to_numeric());
    auto rr = find_roots_numeric(Poly(std::move(coeffs)));
    out.roots = rr.roots;
    out.roots_in_annulus = true;
    Real hi = Real(out.upper);
    for (const auto& [z, mult] : rr.roots) {
        Real a = z.abs_numeric();
        if (a < 1 - tolerance || a > hi * (1 + tolerance))
            out.roots_in_annulus = false;
    }
    return out;
}

bool BoundReport::all_pass() const {
    return pass_h_vs_hps && pass_nu0_vs_hps && pass_theorem_main && pass_corollary_a &&
           pass_theorem_reasonable && pass_nu0_theorem_main && pass_nu0_corollary_a &&
           pass_nu0_theorem_reasonable && pass_genus_log && strictness_consistent;
}

BoundReport bound_report(const CoveredEquation& p, const PuiseuxPoly& s_in, const Trace& trace,
                         bool strictness) {
    BoundReport rep;
    PuiseuxPoly s = s_in.reduce();
    rep.characteristic = trace.characteristic;
    const auto& cd = rep.characteristic;
    long long g = cd.genus;
    long long k_last = static_cast<long long>(trace.steps.size());
    if (g > 0 && k_last < cd.exponents.back())
        throw scalar_error("trace too short: characteristic data incomplete");

    rep.h_p = height(p);
    rep.h_ps = relative_height(p, s);
    rep.nu0 = p.nu0();
    rep.ord_at_least_one = *s.order() >= 1;
    rep.one_covered = p.ramification() == 1;

    for (const auto& st : trace.steps) {
        if (!st.dicritical)
            continue;
        rep.dicritical_exponents.push_back(st.coslope);
        for (size_t l = 0; l < cd.exponents.size(); ++l)
            if (cd.exponents[l] == st.k)
                rep.dicritical_char_indices.push_back(static_cast<long long>(l) + 1);
    }
    for (size_t i = 0; i < rep.dicritical_char_indices.size(); ++i) {
        long long l = rep.dicritical_char_indices[i];
        bool next_dicritical = false;
        for (long long m : rep.dicritical_char_indices)
            next_dicritical = next_dicritical || m == l + 1;
        if (l == g || !next_dicritical)
            rep.terminally_dicritical_indices.push_back(l);
    }

    rep.rhs_theorem_main = theorem_main_rhs(cd.factors, rep.dicritical_char_indices);
    rep.rhs_corollary_a = corollary_a_rhs(cd.factors);
    rep.rhs_theorem_reasonable = theorem_reasonable_rhs(cd.factors);
    rep.reasonableness = reasonableness(p.op(), s.ramification(), cd.factors);

    rep.pass_h_vs_hps = rep.h_p >= rep.h_ps;
    if (rep.ord_at_least_one)
        rep.pass_nu0_vs_hps = rep.nu0 + 1 >= Rat(rep.h_ps);

    bool reasonable = rep.reasonableness.verdict == Reasonable::reasonable;
    if (rep.one_covered) {
        rep.pass_theorem_main = rep.h_ps >= rep.rhs_theorem_main;
        rep.pass_corollary_a = rep.h_ps > rep.rhs_corollary_a;
        if (reasonable)
            rep.pass_theorem_reasonable = rep.h_ps >= rep.rhs_theorem_reasonable;
        else
            rep.notes.push_back("reasonable bound skipped: " + rep.reasonableness.basis);
        if (rep.ord_at_least_one) {
            rep.pass_nu0_theorem_main = rep.nu0 + 1 >= Rat(rep.rhs_theorem_main);
            rep.pass_nu0_corollary_a = rep.nu0 >= Rat(rep.rhs_corollary_a);
            if (reasonable)
                rep.pass_nu0_theorem_reasonable =
                    rep.nu0 + 1 >= Rat(rep.rhs_theorem_reasonable);
        }
        rep.pass_genus_log = !reasonable || genus_log_ok(g, rep.h_ps);
        if (reasonable && rep.ord_at_least_one) {
            Rat lim = rep.nu0 + 1;
            rep.pass_genus_log =
                rep.pass_genus_log && (g <= 1 || Rat(1LL << (g - 1)) <= lim);
        }
    } else {
        rep.pass_theorem_main = rep.pass_corollary_a = rep.pass_genus_log = true;
        rep.notes.push_back("theorem bounds skipped: equation is not 1-covered");
    }

    if (strictness && rep.one_covered && reasonable) {
        rep.strictness_checked = true;
        if (rep.h_ps == rep.rhs_theorem_reasonable && g >= 1) {
            // equality forces: e_g the unique dicritical index >= m, a flat
            // element at e_g, and rigid tops/bottoms in between
            long long n = s.ramification();
            Rat ord = *s.order();
            long long m = static_cast<long long>(boost::multiprecision::numerator(Rat(ord * n)));
            long long eg = cd.exponents.back();
            bool ok = true;
            bool eg_dicritical = false;
            for (const auto& st : trace.steps) {
                if (st.k < m)
                    continue;
                if (st.dicritical) {
                    if (st.k != eg)
                        ok = false;
                    else
                        eg_dicritical = true;
                }
            }
            ok = ok && eg_dicritical;
            const auto& last = trace.steps[static_cast<size_t>(eg - 1)];
            ok = ok && last.element_after.top == 1 && last.element_after.bot == 1;
            for (long long j = m; j < eg && ok; ++j) {
                const auto& st = trace.steps[static_cast<size_t>(j - 1)];
                ok = ok && st.element_after.bot * st.rho == st.element_after.top;
                const auto& nxt = trace.steps[static_cast<size_t>(j)];
                ok = ok && st.element_after.bot == nxt.element_after.top;
            }
            rep.strictness_consistent = ok;
            if (!ok)
                rep.notes.push_back("equality holds but the rigidity conditions fail");
        }
    }
    return rep;
}

bool genus_bound_check(const BoundReport& report) {
    long long g = report.characteristic.genus;
    if (!genus_log_ok(g, report.h_ps))
        return false;
    if (report.ord_at_least_one && g > 1) {
        Rat lim = report.nu0 + 1;
        if (Rat(1LL << (g - 1)) > lim)
            return false;
    }
    return true;
}

// ---- bivariate gcd ---------------------------------------------------------

namespace {

using YPoly = std::map<long long, Poly>; // y-degree -> coefficient in x

YPoly to_ypoly(const XYPoly& f) {
    YPoly out;
    for (const auto& [k, v] : f.terms()) {
        if (boost::multiprecision::denominator(k.i) != 1 || k.i < 0)
            throw scalar_error("gcd needs integer exponents");
        long long e = static_cast<long long>(boost::multiprecision::numerator(k.i));
        auto& c = out[k.j];
        c = c + Poly::monomial(v, e);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Poly content_of(const YPoly& f) {
    Poly g;
    for (const auto& [j, c] : f)
        g = poly_gcd(g, c);
    return g;
}

long long ydeg(const YPoly& f) { return f.empty() ? -1 : f.rbegin()->first; }

YPoly ymul_poly(const YPoly& f, const Poly& c) {
    YPoly out;
    for (const auto& [j, p] : f) {
        Poly q = p * c;
        if (!q.is_zero())
            out[j] = q;
    }
    return out;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
    YPoly out = a;
    for (const auto& [j, p] : b) {
        auto it = out.find(j);
        if (it == out.end()) {
            out[j] = -p;
        } else {
            it->second = it->second - p;
            if (it->second.is_zero())
                out.erase(it);
        }
    }
    return out;
}

YPoly yshift(const YPoly& f, long long by) {
    YPoly out;
    for (const auto& [j, p] : f)
        out[j + by] = p;
    return out;
}

YPoly make_primitive(const YPoly& f) {
    Poly c = content_of(f);
    if (c.is_zero() || c.degree() <= 0)
        return f;
    YPoly out;
    for (const auto& [j, p] : f) {
        auto [q, r] = poly_divmod(p, c);
        if (!r.is_zero())
            throw scalar_error("content division left a remainder");
        out[j] = q;
    }
    return out;
}

// pseudo-remainder sequence; true when the gcd has positive y-degree
bool prs_common_factor(YPoly f, YPoly g) {
    while (true) {
        if (f.empty())
            return ydeg(g) > 0;
        if (g.empty())
            return ydeg(f) > 0;
        if (ydeg(f) < ydeg(g))
            std::swap(f, g);
        if (ydeg(g) == 0)
            return false;
        // pseudo-reduce f by g
        YPoly r = f;
        const Poly& lg = g.rbegin()->second;
        int guard = 0;
        while (!r.empty() && ydeg(r) >= ydeg(g)) {
            Poly lr = r.rbegin()->second;
            long long shift = ydeg(r) - ydeg(g);
            r = ysub(ymul_poly(r, lg), yshift(ymul_poly(g, lr), shift));
            if (++guard > 1000)
                throw scalar_error("gcd reduction did not terminate");
        }
        f = std::move(g);
        g = make_primitive(r);
    }
}

} // namespace

namespace {

Poly specialize_x(const YPoly& f, const Scalar& x0) {
    long long d = ydeg(f);
    std::vector<Scalar> c(static_cast<size_t>(d) + 1, Scalar(0));
    for (const auto& [j, p] : f)
        c[static_cast<size_t>(j)] = p.eval(x0);
    return Poly(std::move(c));
}

} // namespace

bool xy_coprime(const XYPoly& a, const XYPoly& b) {
    if (a.is_zero() || b.is_zero())
        return false;
    YPoly fa = to_ypoly(a), fb = to_ypoly(b);
    Poly ca = content_of(fa), cb = content_of(fb);
    if (poly_gcd(ca, cb).degree() > 0)
        return false;
    if (ydeg(fa) == 0 || ydeg(fb) == 0)
        return true; // a pure-x side: only the contents could have matched
    // A common factor with positive y-degree survives specialization at any
    // x0 that keeps both leading y-coefficients nonzero, since its own lead
    // divides both of them. A trivial specialized gcd is therefore a proof;
    // a nontrivial one may be accidental and falls back to the exact PRS.
    const Poly& la = fa.rbegin()->second;
    const Poly& lb = fb.rbegin()->second;
    int suspicious = 0;
    for (long long probe = 2; suspicious < 3 && probe < 64; ++probe) {
        Scalar x0{Rat(probe * probe + 1, probe)};
        if (la.eval(x0).is_zero() || lb.eval(x0).is_zero())
            continue;
        if (poly_gcd(specialize_x(fa, x0), specialize_x(fb, x0)).degree() == 0)
            return true;
        ++suspicious;
    }
    return !prs_common_factor(make_primitive(fa), make_primitive(fb));
}

// ---- foliation corollary ----------------------------------------------------

FoliationReport foliation_bound_check(const XYPoly& a, const XYPoly& b, const PuiseuxPoly& s_in,
                                      unsigned long long seed) {
    if (!xy_coprime(a, b))
        throw scalar_error("A and B must be coprime at the polynomial level");
    if (!a.coeff(Rat(0), 0).is_zero() || !b.coeff(Rat(0), 0).is_zero())
        throw scalar_error("the foliation must be singular at the origin");
    PuiseuxPoly s = s_in.reduce();
    if (s.is_zero())
        throw scalar_error("the branch must be nonzero");
    long long n = s.ramification();
    // parametrization (x(t), y(t)) = (t^n, s as a series in t)
    PuiseuxPoly xt = PuiseuxPoly::monomial(Scalar(1), n, 1);
    PuiseuxPoly yt(1);
    for (const auto& [i, c] : s.coeffs()) {
        if (i <= 0)
            throw scalar_error("the branch must vanish at the origin");
        yt.set_coeff(i, c);
    }

    std::mt19937_64 rng(seed);
    FoliationReport rep;
    const int max_tries = 33; // identity first, then random changes
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Rat m11(1), m12(0), m21(0), m22(1);
        if (attempt > 0) {
            auto entry = [&]() { return Rat(static_cast<long long>(rng() % 19) - 9); };
            m11 = entry();
            m12 = entry();
            m21 = entry();
            m22 = entry();
            if (m11 * m22 - m12 * m21 == 0)
                continue;
        }
        ++rep.tries;
        Rat det = m11 * m22 - m12 * m21;
        XYPoly am = a.linear_change(m11, m12, m21, m22);
        XYPoly bm = b.linear_change(m11, m12, m21, m22);
        XYPoly anew = am * Scalar(m11) + bm * Scalar(m21);
        XYPoly bnew = am * Scalar(m12) + bm * Scalar(m22);
        // branch in the new coordinates: M^{-1} (x(t), y(t))
        PuiseuxPoly xnew = xt * Scalar(m22 / det) - yt * Scalar(m12 / det);
        PuiseuxPoly ynew = yt * Scalar(m11 / det) - xt * Scalar(m21 / det);
        if (xnew.is_zero())
            continue;
        Rat ordx = *xnew.order();
        if (ynew.is_zero() || *ynew.order() < ordx)
            continue; // tangent to x = 0 in these coordinates
        CoveredEquation p = CoveredEquation::from_raw(differential_op(), anew, bnew);
        Rat nu = p.nu0();
        if (boost::multiprecision::denominator(nu) != 1)
            throw scalar_error("foliation multiplicity must be an integer");
        Poly phi = initial_polynomial(p, Rat(1));
        bool dicritical_case = phi.is_zero();
        bool generic_case = phi.degree() == static_cast<long long>(
                                                 boost::multiprecision::numerator(nu)) +
                                                 1;
        if (!dicritical_case && !generic_case)
            continue;

        rep.changed_coordinates = attempt > 0;
        rep.nu0 = static_cast<long long>(boost::multiprecision::numerator(nu));
        CharacteristicData cd;
        if (*s.order() >= 1) {
            // transverse coordinates on both sides: the characteristic data
            // of the branch is unchanged
            cd = characteristic_data(s);
            if (rep.changed_coordinates)
                rep.notes.push_back("characteristic data reused across the linear change");
        } else {
            // tangent to x = 0 originally: re-expand the transformed branch
            rep.reexpanded = true;
            XYPoly f = branch_minimal_polynomial(s);
            XYPoly fnew = f.linear_change(m11, m12, m21, m22);
            CoveredEquation alg = CoveredEquation::from_raw(differential_op(), fnew, XYPoly());
            long long mult = static_cast<long long>(
                boost::multiprecision::numerator(ordx)); // new multiplicity
            long long target_top = s.top_index();
            bool found = false;
            for (int round = 0; round < 3 && !found; ++round) {
                Rat order_bound(target_top * (2 << round), n);
                ExpandOptions opts;
                opts.max_ramification = std::max<long long>(mult, 24);
                for (const auto& jet : expand(alg, order_bound, opts)) {
                    if (jet.series.is_zero())
                        continue;
                    PuiseuxPoly js = jet.series.reduce();
                    if (js.ramification() == mult && *js.order() >= 1) {
                        cd = characteristic_data(js);
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                throw scalar_error("re-expansion did not reach the full ramification");
        }
        rep.genus = cd.genus;
        rep.rhs = theorem_reasonable_rhs(cd.factors);
        rep.pass = rep.nu0 >= rep.rhs;
        return rep;
    }
    throw scalar_error("genericity conditions not reached after random linear changes");
}

} // namespace puiseux

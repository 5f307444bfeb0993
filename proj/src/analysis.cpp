#include "puiseux/analysis.hpp"

namespace puiseux {

Poly initial_polynomial(const CoveredEquation& p, const Rat& mu) {
    SupportElement e = element(p, mu);
    Scalar d = delta_coeff(p.op(), mu);
    std::vector<Scalar> coeffs(static_cast<size_t>(e.top) + 1, Scalar(0));
    for (const auto& pt : e.points)
        coeffs[static_cast<size_t>(pt.j)] = p.a_at(pt.iota, pt.j) + d * p.b_at(pt.iota, pt.j);
    return Poly(std::move(coeffs));
}

DicriticalTest dicritical_test(const CoveredEquation& p, const Rat& mu) {
    SupportElement e = element(p, mu);
    Scalar d = delta_coeff(p.op(), mu);
    bool exact = d.is_exact();
    for (const auto& pt : e.points) {
        exact = exact && p.a_at(pt.iota, pt.j).is_exact() && p.b_at(pt.iota, pt.j).is_exact();
    }
    DicriticalTest out;
    if (exact) {
        out.dicritical = true;
        for (const auto& pt : e.points)
            if (!(p.a_at(pt.iota, pt.j) + d * p.b_at(pt.iota, pt.j)).is_zero())
                out.dicritical = false;
        return out;
    }
    Real scale(0), worst(0);
    for (const auto& pt : e.points) {
        Scalar a = p.a_at(pt.iota, pt.j);
        Scalar db = d * p.b_at(pt.iota, pt.j);
        scale = std::max({scale, a.abs_numeric(), db.abs_numeric()});
        worst = std::max(worst, (a + db).abs_numeric());
    }
    out.margin = scale == 0 ? Real(0) : Real(worst / scale);
    out.dicritical = *out.margin < numeric::epsilon();
    return out;
}

bool is_dicritical(const CoveredEquation& p, const Rat& mu) {
    return dicritical_test(p, mu).dicritical;
}

std::pair<Poly, Poly> alpha_beta(const CoveredEquation& p_prev, long long k, long long n) {
    Rat mu(k, n);
    SupportElement e = element(p_prev, mu);
    long long t = e.top;
    std::vector<Scalar> ac(static_cast<size_t>(t) + 1, Scalar(0));
    std::vector<Scalar> bc(static_cast<size_t>(t), Scalar(0)); // beta has degree <= t-1
    for (long long j = 0; j <= t; ++j) {
        Rat iota = e.iota_at(j);
        ac[static_cast<size_t>(j)] = p_prev.a_at(iota, j);
        if (j >= 1)
            bc[static_cast<size_t>(j - 1)] = p_prev.b_at(iota, j);
    }
    Poly alpha(std::move(ac)), beta(std::move(bc));
    // decomposition identity Phi = alpha + delta C beta
    Scalar d = delta_coeff(p_prev.op(), mu);
    Poly recomposed = alpha + Poly({Scalar(0), d}) * beta;
    if (!(recomposed == initial_polynomial(p_prev, mu)))
        throw scalar_error("alpha/beta decomposition mismatch");
    return {alpha, beta};
}

std::vector<InitialFormEntry> initial_form(const CoveredEquation& p_prev, long long k,
                                           long long n) {
    Rat mu(k, n);
    SupportElement e = element(p_prev, mu);
    auto [alpha, beta] = alpha_beta(p_prev, k, n);
    Scalar d = delta_coeff(p_prev.op(), mu);
    Poly phi = alpha + Poly({Scalar(0), d}) * beta;
    long long t = e.top;
    std::vector<InitialFormEntry> out;
    Poly phi_der = phi;   // Phi^{(j)}
    Poly beta_der = beta; // beta^{(j-1)}
    Scalar fact(1);       // j!
    Scalar fact1(1);      // (j-1)!
    for (long long j = 0; j <= t; ++j) {
        InitialFormEntry entry;
        entry.j = j;
        entry.iota = e.iota_at(j);
        if (j == 0) {
            entry.a = phi;
            entry.b = Poly();
        } else {
            Scalar invf = fact.inv();
            Scalar invf1 = fact1.inv();
            entry.a = phi_der * invf - beta_der * (d * invf1);
            entry.b = beta_der * invf1;
        }
        out.push_back(std::move(entry));
        // advance derivatives for the next j
        phi_der = (j == 0) ? phi.derivative() : phi_der.derivative();
        if (j >= 1)
            beta_der = beta_der.derivative();
        fact = fact * Scalar(j + 1);
        if (j >= 1)
            fact1 = fact1 * Scalar(j);
    }
    return out;
}

Residues residues(const CoveredEquation& p_k, long long k, long long n) {
    SupportElement e = element(p_k, Rat(k, n));
    Residues r;
    const CloudPoint& top = e.points.front();
    const CloudPoint& bot = e.points.back();
    Scalar at = p_k.a_at(top.iota, top.j), bt = p_k.b_at(top.iota, top.j);
    Scalar ab = p_k.a_at(bot.iota, bot.j), bb = p_k.b_at(bot.iota, bot.j);
    if (!bt.is_zero())
        r.tres = at / bt;
    if (!bb.is_zero())
        r.bres = ab / bb;
    return r;
}

long long grid_denominator(const std::vector<CloudPoint>& cloud) {
    long long r = 1;
    for (const auto& c : cloud)
        r = lcm_ll(r, static_cast<long long>(boost::multiprecision::denominator(c.iota)));
    return r;
}

StepOutcome step(const CoveredEquation& p_prev, long long k, long long n, const Scalar& a_k,
                 long long rho, bool is_characteristic) {
    StepRecord rec;
    rec.k = k;
    rec.n = n;
    rec.coslope = Rat(k, n);
    rec.rho = rho;
    rec.is_characteristic = is_characteristic;
    rec.root = a_k;
    rec.grid_before = grid_denominator(p_prev.cloud());
    rec.element_before = element(p_prev, rec.coslope);
    rec.phi = initial_polynomial(p_prev, rec.coslope);
    DicriticalTest dt = dicritical_test(p_prev, rec.coslope);
    rec.dicritical = dt.dicritical;
    rec.dicritical_margin = dt.margin;
    std::tie(rec.alpha, rec.beta) = alpha_beta(p_prev, k, n);
    if (!rec.dicritical) {
        if (!rec.phi.eval(a_k).is_zero())
            throw not_a_solution(k, "Phi(" + a_k.str() + ") = " + rec.phi.eval(a_k).str());
        rec.root_multiplicity = rec.phi.root_multiplicity(a_k);
    }
    CoveredEquation next = substitute(p_prev, a_k, k, n);
    rec.element_after = element(next, rec.coslope);
    if (rec.element_after.top != rec.element_before.top)
        throw scalar_error("top of the element changed across a substitution");
    auto res = residues(next, k, n);
    rec.tres = res.tres;
    rec.bres = res.bres;
    rec.grid_after = grid_denominator(next.cloud());
    return {std::move(rec), std::move(next)};
}

Trace trace_solution(const CoveredEquation& p, const PuiseuxPoly& s_in, long long k_last) {
    PuiseuxPoly s = s_in.reduce();
    if (s.is_zero())
        throw scalar_error("tracing the zero solution");
    if (*s.order() <= 0)
        throw scalar_error("solutions must have positive order");
    Trace tr;
    tr.characteristic = characteristic_data(s);
    long long n = s.ramification();
    if (k_last <= 0)
        k_last = s.top_index();
    tr.equations.push_back(p);
    CoveredEquation cur = p;
    for (long long k = 1; k <= k_last; ++k) {
        long long rho = factor_for_index(tr.characteristic, k);
        auto out = step(cur, k, n, s.coeff(k), rho, rho > 1);
        cur = out.next;
        tr.steps.push_back(std::move(out.record));
        tr.equations.push_back(cur);
    }
    return tr;
}

} // namespace puiseux

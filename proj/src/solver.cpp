#include "puiseux/solver.hpp"

#include <algorithm>
#include <limits>

namespace puiseux {

namespace {

// continued-fraction rationalization of a positive real, denominator capped
std::optional<Rat> rationalize(const Real& x, long long max_den) {
    if (x <= 0)
        return std::nullopt;
    Real rem = x;
    Int h0 = 0, h1 = 1, k0 = 1, k1 = 0; // convergents
    for (int it = 0; it < 64; ++it) {
        Real fl = boost::multiprecision::floor(rem);
        Int a = fl.convert_to<Int>();
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den)
            break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Real frac = rem - fl;
        if (frac < boost::multiprecision::ldexp(Real(1), -64))
            break;
        rem = 1 / frac;
    }
    if (k1 == 0)
        return std::nullopt;
    return Rat(h1, k1);
}

} // namespace

std::optional<Rat> q_log_rational(const OperatorSpec& op, const Scalar& w, long long max_den) {
    if (w.is_zero())
        return std::nullopt;
    using boost::multiprecision::abs;
    using boost::multiprecision::log;
    Real lw = log(w.abs_numeric());
    Real lq = log(op.q.abs_numeric());
    if (lq == 0)
        return std::nullopt;
    auto mu = rationalize(lw / lq, max_den);
    if (!mu || *mu <= 0)
        return std::nullopt;
    // exact verification when everything is exact, numeric otherwise
    if (q_power(op, *mu) == w)
        return mu;
    return std::nullopt;
}

std::vector<Rat> candidate_exponents(const CoveredEquation& p, const ExpandOptions& opts) {
    std::vector<Rat> out;
    if (p.is_zero())
        return out;
    auto cl = p.cloud();
    auto poly = build_polygon(cl);
    for (const Rat& mu : poly.side_coslopes())
        if (mu > 0)
            out.push_back(mu);
    for (const auto& v : poly.vertices()) {
        if (v.j < 1)
            continue;
        Scalar a = p.a_at(v.iota, v.j);
        Scalar b = p.b_at(v.iota, v.j);
        if (b.is_zero() || a.is_zero())
            continue;
        Scalar w = -a / b; // delta_mu = w
        if (p.op().is_differential()) {
            if (!w.is_rational())
                continue;
            Rat mu = w.rat();
            if (mu > 0)
                out.push_back(mu);
        } else {
            if (auto mu = q_log_rational(p.op(), w, opts.max_q_log_denominator))
                out.push_back(*mu);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<Scalar> roots_with_fallback(const Poly& phi, bool numeric_fallback) {
    RootResult rr = find_roots(phi);
    std::vector<Scalar> out;
    for (const auto& [r, m] : rr.roots)
        if (!r.is_zero())
            out.push_back(r);
    if (!rr.complete()) {
        if (!numeric_fallback)
            throw scalar_error("unsolved exact factor of degree " +
                               std::to_string(rr.unsolved.degree()) +
                               "; enable the numeric backend");
        for (const auto& [r, m] : find_roots_numeric(rr.unsolved).roots)
            if (!r.is_zero())
                out.push_back(r);
    }
    return out;
}

struct Explorer {
    Rat max_order;
    ExpandOptions opts;
    std::vector<BranchJet> results;

    void finalize(const CoveredEquation& eq, const PuiseuxPoly& series, const Rat& last_mu,
                  std::vector<StepRecord> trace) {
        BranchJet jet;
        jet.series = series.reduce();
        jet.trace = std::move(trace);
        jet.certified_order = last_mu;
        // exact finite solution: no pure-x terms left
        bool a_flat = true;
        long long min_j = std::numeric_limits<long long>::max();
        for (const auto& c : eq.cloud())
            min_j = std::min(min_j, c.j);
        for (const auto& [k, v] : eq.a().terms())
            if (k.j == 0)
                a_flat = false;
        if (a_flat && min_j >= 1) {
            jet.status = JetStatus::certified_extends;
            jet.certified_order = max_order;
            results.push_back(std::move(jet));
            return;
        }
        // quasi-linear regime: the element just beyond last_mu has height 1
        // and its pivot cannot resonate at any later admissible co-slope
        bool quasi = false;
        if (!series.is_zero() && last_mu > 0) {
            SupportElement e = element(eq, last_mu);
            if (e.bot == 1) {
                const CloudPoint& pivot = e.points.back();
                Scalar a = eq.a_at(pivot.iota, pivot.j);
                Scalar b = eq.b_at(pivot.iota, pivot.j);
                if (b.is_zero()) {
                    quasi = true; // linear coefficient is the constant a != 0
                } else if (!a.is_zero()) {
                    Scalar w = -a / b;
                    std::optional<Rat> res;
                    if (eq.op().is_differential()) {
                        if (w.is_rational() && w.rat() > 0)
                            res = w.rat();
                    } else {
                        res = q_log_rational(eq.op(), w, opts.max_q_log_denominator);
                    }
                    quasi = !res || *res <= last_mu;
                }
            }
        }
        jet.status = quasi ? JetStatus::certified_extends : JetStatus::jet_only;
        results.push_back(std::move(jet));
    }

    void explore(const CoveredEquation& eq, const PuiseuxPoly& series, const Rat& last_mu,
                 const std::vector<StepRecord>& trace) {
        std::vector<Rat> cands;
        for (const Rat& mu : candidate_exponents(eq, opts)) {
            if (mu <= last_mu || mu > max_order)
                continue;
            long long den = static_cast<long long>(boost::multiprecision::denominator(mu));
            if (lcm_ll(series.ramification(), den) > opts.max_ramification)
                continue;
            cands.push_back(mu);
        }
        if (cands.empty()) {
            finalize(eq, series, last_mu, trace);
            return;
        }
        bool any_branch = false;
        for (const Rat& mu : cands) {
            long long k = static_cast<long long>(boost::multiprecision::numerator(mu));
            long long n = static_cast<long long>(boost::multiprecision::denominator(mu));
            std::vector<Scalar> values;
            if (is_dicritical(eq, mu)) {
                auto form = initial_form(eq, k, n);
                Poly b1 = form.size() > 1 ? form[1].b : Poly();
                std::vector<Scalar> special;
                if (!b1.is_zero())
                    special = roots_with_fallback(b1, opts.numeric_fallback);
                BranchJet family;
                family.series = series.reduce();
                family.status = JetStatus::dicritical_free_parameter;
                family.parameter_position = mu;
                family.excluded = special;
                family.trace = trace;
                family.certified_order = mu;
                results.push_back(family);
                values = special;
                for (int sample = 1; static_cast<int>(values.size()) <
                                     static_cast<int>(special.size()) + opts.dicritical_samples;
                     ++sample) {
                    Scalar cand(sample);
                    bool clash = false;
                    for (const auto& x : values)
                        clash = clash || x == cand;
                    if (!clash)
                        values.push_back(cand);
                }
            } else {
                values = roots_with_fallback(initial_polynomial(eq, mu), opts.numeric_fallback);
            }
            for (const Scalar& c : values) {
                any_branch = true;
                auto out = step(eq, k, n, c);
                PuiseuxPoly extended = series + PuiseuxPoly::monomial(c, k, n);
                std::vector<StepRecord> tr = trace;
                tr.push_back(out.record);
                explore(out.next, extended, mu, tr);
            }
        }
        if (!any_branch)
            finalize(eq, series, last_mu, trace);
    }
};

} // namespace

std::vector<BranchJet> expand(const CoveredEquation& p, const Rat& max_order,
                              const ExpandOptions& opts) {
    Explorer ex;
    ex.max_order = max_order;
    ex.opts = opts;
    ex.explore(p, PuiseuxPoly(1), Rat(0), {});
    // canonical output order: by series text, stable across exploration order
    std::sort(ex.results.begin(), ex.results.end(), [](const BranchJet& a, const BranchJet& b) {
        if (a.status != b.status)
            return static_cast<int>(a.status) < static_cast<int>(b.status);
        return a.series.str() < b.series.str();
    });
    return ex.results;
}

VerifyReport verify_solution(const CoveredEquation& p, const PuiseuxPoly& s_in, long long k_last) {
    VerifyReport rep;
    PuiseuxPoly s = s_in.reduce();
    if (s.is_zero() || *s.order() <= 0)
        throw scalar_error("verify_solution needs ord(s) > 0");
    if (k_last <= 0)
        k_last = s.top_index();
    long long n = s.ramification();
    CoveredEquation cur = p;
    CharacteristicData cd = characteristic_data(s);
    for (long long k = 1; k <= k_last; ++k) {
        try {
            auto out = step(cur, k, n, s.coeff(k), factor_for_index(cd, k),
                            factor_for_index(cd, k) > 1);
            cur = out.next;
        } catch (const not_a_solution& e) {
            rep.pass = false;
            rep.failed_k = e.k;
            rep.message = e.what();
            return rep;
        }
    }
    SupportElement e = element(cur, Rat(k_last, n));
    rep.threshold = e.alpha * Rat(k_last, n);
    long long min_j = std::numeric_limits<long long>::max();
    for (const auto& c : cur.cloud())
        min_j = std::min(min_j, c.j);
    rep.horizontal_height = min_j;
    PuiseuxPoly r = p.residual(s);
    if (r.is_zero()) {
        rep.exact_zero = true;
        rep.pass = true;
        return rep;
    }
    rep.residual_order = *r.order();
    rep.pass = *rep.residual_order > rep.threshold;
    if (!rep.pass)
        rep.message = "residual order does not clear the supporting-line intercept";
    return rep;
}

} // namespace puiseux

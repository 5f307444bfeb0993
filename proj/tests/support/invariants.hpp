#pragma once

#include "puiseux/analysis.hpp"
#include "puiseux/solver.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace puiseux::testing {

struct TraceCheckOptions {
    bool parametric_identities = false; // full-C oracle via substitute_parametric
    bool grid_lemma = true;             // 1-covered grid refinement lemma
};

struct TraceCheckResult {
    std::vector<std::string> violations;
    long long steps_checked = 0;
    bool ok() const { return violations.empty(); }
};

namespace detail {
inline void flag(TraceCheckResult& res, long long k, const std::string& what) {
    res.violations.push_back("k=" + std::to_string(k) + ": " + what);
}
} // namespace detail

// Every per-step law the descent machinery guarantees along a solution trace.
inline TraceCheckResult check_trace_invariants(const Trace& tr,
                                               const TraceCheckOptions& opts = {}) {
    using detail::flag;
    TraceCheckResult res;
    bool one_covered = grid_denominator(tr.equations.front().cloud()) == 1;
    long long g = tr.characteristic.genus;

    for (size_t idx = 0; idx < tr.steps.size(); ++idx) {
        const StepRecord& st = tr.steps[idx];
        const CoveredEquation& before = tr.equations[idx];
        const CoveredEquation& after = tr.equations[idx + 1];
        long long k = st.k;
        res.steps_checked++;
        Scalar d = delta_coeff(after.op(), st.coslope);
        long long t = st.element_before.top;
        long long bot = st.element_after.bot;

        // the root property and the element staying above the axis
        if (!st.phi.eval(st.root).is_zero())
            flag(res, k, "Phi(a_k) != 0");
        if (bot < 1)
            flag(res, k, "Bot(E_k) < 1");
        if (st.element_after.top != t)
            flag(res, k, "Top changed across the substitution");

        // descent identities at C = a_k, coefficients read off P_k
        Poly phi_der = st.phi;
        Poly beta_der = st.beta;
        Scalar fact(1), fact1(1);
        for (long long j = 0; j <= t; ++j) {
            Rat iota = st.element_before.iota_at(j);
            Scalar acoef = after.a_at(iota, j);
            Scalar bcoef = after.b_at(iota, j);
            if (j == 0) {
                if (!(acoef == st.phi.eval(st.root)))
                    flag(res, k, "A^k at the axis point is not Phi(a_k)");
            } else {
                Scalar phij = phi_der.eval(st.root) * fact.inv();
                Scalar betaj = beta_der.eval(st.root) * fact1.inv();
                if (!(bcoef == betaj))
                    flag(res, k, "B^k identity fails at j=" + std::to_string(j));
                if (!(acoef == phij - d * betaj))
                    flag(res, k, "A^k identity fails at j=" + std::to_string(j));
                if (!(acoef + d * bcoef == phij))
                    flag(res, k, "A + delta B identity fails at j=" + std::to_string(j));
            }
            phi_der = phi_der.derivative();
            if (j >= 1)
                beta_der = beta_der.derivative();
            fact = fact * Scalar(j + 1);
            if (j >= 1)
                fact1 = fact1 * Scalar(j);
        }

        // full parametric identities against the independent substitution
        if (opts.parametric_identities) {
            auto form = initial_form(before, st.k, st.n);
            auto par = substitute_parametric(before, st.k, st.n);
            for (const auto& en : form) {
                if (!(par.a_at(en.iota, en.j) == en.a))
                    flag(res, k, "parametric A identity fails at j=" + std::to_string(en.j));
                if (en.j >= 1 && !(par.b_at(en.iota, en.j) == en.b))
                    flag(res, k, "parametric B identity fails at j=" + std::to_string(en.j));
            }
        }

        // The descent proposition argues through the lattice of P_{k-1},
        // which must sit inside the solution grid r_1...r_{l-1} reached
        // before this exponent. That holds automatically for 1-covered
        // starts; n-covered planted equations can violate it, and then the
        // proposition's hypotheses simply do not apply.
        long long sol_grid = 1;
        for (size_t i = 0; i < tr.characteristic.exponents.size(); ++i)
            if (tr.characteristic.exponents[i] < k)
                sol_grid *= tr.characteristic.factors[i];
        bool lattice_ok = st.rho == 1 || (sol_grid % st.grid_before == 0);

        // descent inequalities
        if (lattice_ok && (!st.dicritical || st.rho == 1)) {
            if (bot * st.rho > t)
                flag(res, k, "descent bound Bot <= Top/rho fails");
        }
        if (lattice_ok && st.dicritical) {
            if (t < st.rho * bot - (st.rho - 1))
                flag(res, k, "dicritical descent bound fails");
        }

        // multiplicity bounds
        if (!st.dicritical && st.phi.root_multiplicity(st.root) < bot)
            flag(res, k, "multiplicity of a_k in Phi below Bot(E_k)");
        if (!st.beta.is_zero() && st.beta.root_multiplicity(st.root) < bot - 1)
            flag(res, k, "multiplicity of a_k in beta below Bot(E_k) - 1");
        if (st.dicritical) {
            auto form = initial_form(before, st.k, st.n);
            if (form.size() > 1) {
                if (form[1].b.is_zero())
                    flag(res, k, "dicritical B at height one vanishes identically");
                else if (bot > 1 && !form[1].b.eval(st.root).is_zero())
                    flag(res, k, "a_k is not a root of the height-one B polynomial");
            }
        }

        // equality case: Phi factors through C^rho - a^rho
        if (lattice_ok && !st.dicritical && bot * st.rho == t && st.phi.degree() == t) {
            Poly target = Poly::constant(st.phi.lead());
            Poly base = Poly::monomial(Scalar(1), st.rho) -
                        Poly::constant(st.root.pow(st.rho));
            for (long long b = 0; b < bot; ++b)
                target = target * base;
            if (!(st.phi == target))
                flag(res, k, "sharp factorization u(C^rho - a^rho)^Bot fails");
        }

        // residue recurrence; the non-dicritical branch leans on the sharp
        // factorization, so it inherits the same lattice hypothesis
        if (st.dicritical || (bot * st.rho == t && (st.rho == 1 || lattice_ok))) {
            if (!st.tres.has_value()) {
                if (st.bres.has_value())
                    flag(res, k, "tres infinite but bres finite");
            } else if (!st.bres.has_value()) {
                flag(res, k, "bres infinite but tres finite");
            } else {
                Scalar want = Scalar(st.rho) * *st.tres + Scalar(st.rho - 1) * d;
                if (!(*st.bres == want))
                    flag(res, k, "residue recurrence fails");
            }
        }

        // a dicritical bottom point never sits on a later dicritical element
        if (st.dicritical) {
            const CloudPoint& q = st.element_after.points.back();
            for (size_t later = idx + 1; later < tr.steps.size(); ++later) {
                const StepRecord& lt = tr.steps[later];
                if (!lt.dicritical)
                    continue;
                if (Rat(q.j) + q.iota / lt.coslope == lt.element_before.alpha)
                    flag(res, k, "dicritical bottom lies on the dicritical element at k=" +
                                     std::to_string(lt.k));
            }
        }

        // polygon stability at and above the top of the element
        {
            auto np_before = build_polygon(before.cloud());
            const CloudPoint& toppt = st.element_before.points.front();
            for (size_t later = idx + 1; later <= tr.steps.size(); ++later) {
                const CoveredEquation& pl = tr.equations[later];
                auto np_later = build_polygon(pl.cloud());
                std::vector<Vertex> a, b;
                for (const auto& v : np_before.vertices())
                    if (v.j >= t)
                        a.push_back(v);
                for (const auto& v : np_later.vertices())
                    if (v.j >= t)
                        b.push_back(v);
                if (!(a == b)) {
                    flag(res, k, "polygon changed above the top at l=" +
                                     std::to_string(later));
                    break;
                }
                if (!(pl.a_at(toppt.iota, toppt.j) == before.a_at(toppt.iota, toppt.j)) ||
                    !(pl.b_at(toppt.iota, toppt.j) == before.b_at(toppt.iota, toppt.j))) {
                    flag(res, k, "topmost coefficients drifted at l=" + std::to_string(later));
                    break;
                }
            }
            // the element itself is stable: E_k = E_{l,k/n}
            const CoveredEquation& last = tr.equations.back();
            SupportElement efinal = element(last, st.coslope);
            if (efinal.alpha != st.element_after.alpha ||
                efinal.top != st.element_after.top || efinal.bot != st.element_after.bot)
                flag(res, k, "element of co-slope k/n drifted by the end of the trace");
        }

        // characteristic exponents open whole sides; the grid refines exactly
        // at characteristic substitutions while the element is high enough
        if (one_covered && st.is_characteristic) {
            bool is_last = !tr.characteristic.exponents.empty() &&
                           k == tr.characteristic.exponents.back();
            if ((!is_last || !st.dicritical) && st.element_after.top == st.element_after.bot)
                flag(res, k, "characteristic exponent did not open a side");
        }
        if (one_covered && opts.grid_lemma && st.element_after.top > 1) {
            bool refined = (st.grid_before % st.grid_after) != 0;
            if (st.is_characteristic && !refined)
                flag(res, k, "characteristic step did not refine the grid");
            if (!st.is_characteristic && refined)
                flag(res, k, "non-characteristic step refined the grid");
        }
        (void)g;
    }
    return res;
}

} // namespace puiseux::testing

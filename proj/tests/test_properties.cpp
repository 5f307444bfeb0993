#include "doctest.h"

#include "puiseux/bounds.hpp"
#include "puiseux/parser.hpp"
#include "support/fixtures.hpp"
#include "support/invariants.hpp"

using namespace puiseux;
using namespace puiseux::testing;

namespace {

// q-difference corpus: rational branches of ramification <= 2 so that every
// delta stays inside one quadratic extension
PuiseuxPoly q_corpus_branch(unsigned long long seed) {
    std::mt19937_64 rng(seed * 77 + 5);
    PuiseuxPoly s(2);
    long long last = 1 + static_cast<long long>(rng() % 3);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        s.set_coeff(last, Scalar(Rat(1 + static_cast<long long>(rng() % 5),
                                     1 + static_cast<long long>(rng() % 2)) *
                                 (rng() % 2 ? 1 : -1)));
        last += 1 + static_cast<long long>(rng() % 3);
    }
    return s;
}

CoveredEquation q_corpus_equation(const PuiseuxPoly& s, const OperatorSpec& op,
                                  unsigned long long seed) {
    std::mt19937_64 rng(seed * 31 + 2);
    XYPoly b = XYPoly::monomial(Scalar(1 + static_cast<long long>(rng() % 2)), Rat(rng() % 2),
                                static_cast<long long>(rng() % 2)) +
               XYPoly::monomial(Scalar(1), Rat(1), 0);
    XYPoly d = XYPoly::monomial(Scalar(static_cast<long long>(rng() % 5) - 2), Rat(1), 1);
    PuiseuxPoly e(1);
    if (rng() % 2)
        e.set_coeff(1 + static_cast<long long>(rng() % 2), Scalar(1));
    return gen_covered_with_solution(s, b, d, e, op);
}

} // namespace

TEST_CASE("trace invariants over the differential corpus") {
    int count = 0;
    for (unsigned long long seed = 1; count < 60; ++seed) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.genus_bound = 3;
        spec.ramification_bound = 12;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero())
            continue;
        auto p = gen_differential_from_branch(s);
        auto tr = trace_solution(p, s);
        TraceCheckOptions opts;
        opts.parametric_identities = (count % 6 == 0);
        auto res = check_trace_invariants(tr, opts);
        for (const auto& v : res.violations)
            MESSAGE("seed ", seed, ": ", v);
        CHECK(res.ok());
        ++count;
    }
}

TEST_CASE("trace invariants over the worked example, parametric included") {
    auto tr = trace_solution(worked_eq(), worked_solution());
    TraceCheckOptions opts;
    opts.parametric_identities = true;
    auto res = check_trace_invariants(tr, opts);
    for (const auto& v : res.violations)
        MESSAGE(v);
    CHECK(res.ok());
}

TEST_CASE("trace invariants over the q-difference corpus, exact backends") {
    int count = 0;
    for (unsigned long long seed = 1; count < 30; ++seed) {
        OperatorSpec op = (seed % 2) ? q_difference_op(Scalar(2), Scalar::sqrt_of_int(2), 2)
                                     : q_difference_op(Scalar(Rat(1, 2)),
                                                       Scalar::quadratic(0, Rat(1, 2), 2), 2);
        PuiseuxPoly s = q_corpus_branch(seed);
        auto p = q_corpus_equation(s, op, seed);
        auto vr = verify_solution(p, s, 0);
        REQUIRE(vr.pass);
        auto tr = trace_solution(p, s);
        TraceCheckOptions opts;
        opts.parametric_identities = (count % 7 == 0);
        auto res = check_trace_invariants(tr, opts);
        for (const auto& v : res.violations)
            MESSAGE("seed ", seed, ": ", v);
        CHECK(res.ok());
        ++count;
    }
}

TEST_CASE("trace invariants with a numeric q") {
    // q = 3 + i/4 in the numeric backend
    Scalar q = Scalar::complex(Real(3), Real(1) / 4);
    OperatorSpec op = q_difference_op(q);
    int count = 0;
    for (unsigned long long seed = 2; count < 8; ++seed) {
        PuiseuxPoly s = to_numeric(q_corpus_branch(seed));
        auto p = q_corpus_equation(s, op, seed);
        auto tr = trace_solution(p, s);
        auto res = check_trace_invariants(tr);
        for (const auto& v : res.violations)
            MESSAGE("seed ", seed, ": ", v);
        CHECK(res.ok());
        ++count;
    }
}

TEST_CASE("theorem bounds over the differential corpus") {
    int count = 0;
    for (unsigned long long seed = 1; count < 60; ++seed) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.genus_bound = 3;
        spec.ramification_bound = 12;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero())
            continue;
        auto p = gen_differential_from_branch(s);
        auto tr = trace_solution(p, s);
        auto rep = bound_report(p, s, tr, true);
        CHECK(rep.all_pass());
        CHECK(rep.reasonableness.verdict == Reasonable::reasonable);
        CHECK(genus_bound_check(rep));
        ++count;
    }
}

TEST_CASE("branches of order below one trace cleanly") {
    // sigma pushes exponents in (-1, 0) into the A side; the cloud region
    // absorbs them and every step law still holds
    int count = 0;
    for (unsigned long long seed = 1; count < 25; ++seed) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.genus_bound = 2;
        spec.ramification_bound = 8;
        spec.order_at_least_one = false;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero() || *s.order() >= 1)
            continue;
        auto p = gen_differential_from_branch(s);
        auto tr = trace_solution(p, s);
        auto res = check_trace_invariants(tr);
        for (const auto& v : res.violations)
            MESSAGE("seed ", seed, ": ", v);
        CHECK(res.ok());
        auto rep = bound_report(p, s, tr);
        CHECK_FALSE(rep.ord_at_least_one);
        CHECK(rep.all_pass()); // the nu0 clauses are vacuous here
        ++count;
    }
    CHECK(count >= 20);
    // the inverted cusp concretely: y^3 - x^2 differentiated
    auto p = gen_differential_from_branch(parse_series("x^(2/3)"));
    auto tr = trace_solution(p, parse_series("x^(2/3)"));
    bool saw_negative = false;
    for (const auto& [key, c] : tr.equations.back().a().terms())
        saw_negative = saw_negative || key.i < 0;
    CHECK(saw_negative);
    CHECK(check_trace_invariants(tr).ok());
}

TEST_CASE("two consecutive dicritical characteristic exponents shrink the top") {
    // hard to hit organically; assert the implication form over the corpus
    int count = 0;
    for (unsigned long long seed = 1; count < 40; ++seed) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.genus_bound = 3;
        spec.ramification_bound = 12;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero())
            continue;
        auto p = gen_differential_from_branch(s);
        auto tr = trace_solution(p, s);
        const auto& cd = tr.characteristic;
        for (size_t l = 0; l + 1 < cd.exponents.size(); ++l) {
            const auto& st1 = tr.steps[static_cast<size_t>(cd.exponents[l] - 1)];
            const auto& st2 = tr.steps[static_cast<size_t>(cd.exponents[l + 1] - 1)];
            if (st1.dicritical && st2.dicritical) {
                CHECK(Rat(st2.element_after.top) <
                      Rat(st1.element_after.top, cd.factors[l]));
            }
        }
        ++count;
    }
}

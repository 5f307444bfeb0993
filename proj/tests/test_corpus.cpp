#include "doctest.h"

#include "puiseux/corpus.hpp"
#include "puiseux/parser.hpp"
#include "puiseux/solver.hpp"

using namespace puiseux;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == Poly({Scalar(-1), Scalar(1)}));
    CHECK(cyclotomic(2) == Poly({Scalar(1), Scalar(1)}));
    CHECK(cyclotomic(4) == Poly({Scalar(1), Scalar(0), Scalar(1)}));
    CHECK(cyclotomic(6) == Poly({Scalar(1), Scalar(-1), Scalar(1)}));
    CHECK(cyclotomic(12).degree() == 4);
}

TEST_CASE("minimal polynomial of simple branches") {
    CHECK(branch_minimal_polynomial(parse_series("x")) ==
          parse_equation("y - x", differential_op()).a());
    // s = x^{3/2}: y^2 - x^3
    CHECK(branch_minimal_polynomial(parse_series("x^(3/2)")) ==
          parse_equation("y^2 - x^3", differential_op()).a());
}

TEST_CASE("minimal polynomial vanishes on the branch") {
    for (const char* text : {"x^(3/2) + x^(7/4)", "- x - sqrt(11)*x^(3/2) - (121/30)*x^2",
                             "x^(2/3) + x", "2*x + x^(7/6)"}) {
        PuiseuxPoly s = parse_series(text);
        XYPoly f = branch_minimal_polynomial(s);
        CHECK(f.integer_exponents());
        CHECK(f.y_degree() == s.reduce().ramification());
        CHECK(f.eval_y(s).is_zero());
    }
}

TEST_CASE("quartic branch gives a quartic polynomial") {
    XYPoly f = branch_minimal_polynomial(parse_series("x^(3/2) + x^(7/4)"));
    CHECK(f.y_degree() == 4);
    CHECK(f.coeff(Rat(0), 4) == Scalar(1));
}

TEST_CASE("differential equations from branches") {
    auto p = gen_differential_from_branch(parse_series("x^(3/2)"));
    auto expect = parse_equation("-3*x^2 + 2*y*y1", differential_op());
    CHECK(p.a() == expect.a());
    CHECK(p.b_shifted() == expect.b_shifted());

    auto triv = gen_differential_from_branch(parse_series("x"));
    CHECK(triv.a() == parse_equation("-1", differential_op()).a());

    auto quartic = gen_differential_from_branch(parse_series("x^(3/2) + x^(7/4)"));
    auto rep = verify_solution(quartic, parse_series("x^(3/2) + x^(7/4)"), 0);
    CHECK(rep.pass);
    CHECK(rep.exact_zero);
    CHECK(quartic.ramification() == 1);
}

TEST_CASE("planted covered equations solve exactly") {
    // differential: s = x, B = x, D = 0, e = 0 gives A = -x
    auto p1 = gen_covered_with_solution(parse_series("x"), XYPoly::monomial(Scalar(1), Rat(1), 0),
                                        XYPoly(), PuiseuxPoly(1), differential_op());
    CHECK(p1.a() == parse_equation("-x", differential_op()).a());
    CHECK(p1.residual(parse_series("x")).is_zero());

    // q-difference: s = x^{1/2}, B = y, D = 1, e = 0
    auto op = q_difference_op(Scalar(4), Scalar(2), 2);
    auto p2 = gen_covered_with_solution(parse_series("x^(1/2)"),
                                        XYPoly::monomial(Scalar(1), Rat(0), 1), XYPoly::constant(Scalar(1)),
                                        PuiseuxPoly(1), op);
    auto rep = verify_solution(p2, parse_series("x^(1/2)"), 0);
    CHECK(rep.pass);
    CHECK(rep.exact_zero);
}

TEST_CASE("random planted equations pass verify_solution") {
    for (unsigned long long seed = 1; seed <= 60; ++seed) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.genus_bound = 2;
        spec.ramification_bound = 6;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero())
            continue;
        std::mt19937_64 rng(seed ^ 0xabcdefull);
        XYPoly b = XYPoly::monomial(Scalar(1 + static_cast<long long>(rng() % 3)),
                                    Rat(rng() % 2), rng() % 2);
        XYPoly d = XYPoly::monomial(Scalar(static_cast<long long>(rng() % 5) - 2), Rat(1), 0);
        PuiseuxPoly e(1);
        if (rng() % 2)
            e.set_coeff(1, Scalar(1));
        bool qmode = seed % 3 == 0;
        OperatorSpec op =
            qmode ? q_difference_op(Scalar(2), Scalar::sqrt_of_int(2), 2) : differential_op();
        if (qmode)
            s = s.reduce().ramification() > 2 ? parse_series("x^(1/2) + x") : s;
        auto p = gen_covered_with_solution(s, b, d, e, op);
        auto rep = verify_solution(p, s, 0);
        CHECK(rep.pass);
        CHECK(rep.exact_zero);
    }
}

TEST_CASE("random branches round-trip their characteristic factors") {
    int checked = 0;
    for (unsigned long long seed = 1; seed <= 80; ++seed) {
        CorpusSpec spec;
        spec.seed = seed;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero())
            continue;
        auto cd = characteristic_data(s);
        long long prod = 1;
        for (long long r : cd.factors)
            prod *= r;
        CHECK(prod == s.reduce().ramification());
        CHECK(prod <= spec.ramification_bound);
        CHECK(cd.genus <= spec.genus_bound);
        if (spec.order_at_least_one)
            CHECK(*s.order() >= 1);
        ++checked;
    }
    CHECK(checked >= 70);
}

TEST_CASE("branches with pinned factors") {
    CorpusSpec spec;
    spec.seed = 7;
    auto s = gen_random_branch(spec, {2, 2});
    auto cd = characteristic_data(s);
    CHECK(cd.genus == 2);
    CHECK(cd.factors == std::vector<long long>{2, 2});
    auto s3 = gen_random_branch(spec, {3, 2, 2});
    CHECK(characteristic_data(s3).factors == std::vector<long long>{3, 2, 2});
    CHECK(s3.reduce().ramification() == 12);
    // generation is a pure function of the CorpusSpec
    CHECK(gen_random_branch(spec, {2, 2}) == s);
}

TEST_CASE("planted differential equations are 1-covered") {
    for (unsigned long long seed = 1; seed <= 20; ++seed) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.genus_bound = 2;
        spec.ramification_bound = 6;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero())
            continue;
        auto p = gen_differential_from_branch(s);
        CHECK(p.ramification() == 1);
        CHECK(grid_denominator(p.cloud()) == 1);
        auto rep = verify_solution(p, s, 0);
        CHECK(rep.pass);
    }
}

namespace {
// prefix equals full truncated at the prefix's top exponent
bool is_prefix(const PuiseuxPoly& prefix, const PuiseuxPoly& full) {
    if (prefix.is_zero())
        return true;
    if (full.is_zero())
        return false;
    long long m = lcm_ll(prefix.reduce().ramification(), full.reduce().ramification());
    PuiseuxPoly a = prefix.reduce().with_ramification(m);
    PuiseuxPoly b = full.reduce().with_ramification(m);
    return b.truncate(a.top_index()) == a;
}
} // namespace

TEST_CASE("expand recovers planted branches") {
    int recovered = 0;
    for (unsigned long long seed : {3ull, 5ull, 9ull, 12ull, 17ull}) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.genus_bound = 2;
        spec.ramification_bound = 4;
        spec.filler_terms = 0;
        PuiseuxPoly s = gen_random_branch(spec);
        if (s.is_zero())
            continue;
        auto p = gen_differential_from_branch(s);
        Rat k(s.top_index(), s.reduce().ramification());
        auto jets = expand(p, k);
        bool found = false;
        for (const auto& j : jets)
            found = found || is_prefix(s, j.series);
        CHECK(found);
        ++recovered;
    }
    CHECK(recovered >= 4);
}

#include "doctest.h"

#include "puiseux/parser.hpp"
#include "puiseux/solver.hpp"
#include "support/fixtures.hpp"

using namespace puiseux;
using namespace puiseux::testing;

namespace {
bool contains_series(const std::vector<BranchJet>& jets, const PuiseuxPoly& s) {
    for (const auto& j : jets)
        if (j.series == s)
            return true;
    return false;
}
} // namespace

TEST_CASE("candidate exponents of the figure equation") {
    auto p = figure_eq(differential_op());
    auto cands = candidate_exponents(p);
    // sides give 1/2 and 2; the vertex (1,2) resonates at mu = 1
    CHECK(cands == std::vector<Rat>{Rat(1, 2), Rat(1), Rat(2)});
}

TEST_CASE("vertex resonance only") {
    auto p = parse_equation("3*y - 2*x*y1", differential_op()); // my - nxy', m/n = 3/2
    CHECK(candidate_exponents(p) == std::vector<Rat>{Rat(3, 2)});
    CHECK(candidate_exponents(parse_equation("y - x", differential_op())) ==
          std::vector<Rat>{Rat(1)});
}

TEST_CASE("q-difference resonance via bounded rational log") {
    // q = 4, equation 8 y - y1: delta_mu = 8 => mu = 3/2
    auto op = q_difference_op(Scalar(4), Scalar(2), 2);
    auto p = parse_equation("8*y - y1", op);
    CHECK(candidate_exponents(p) == std::vector<Rat>{Rat(3, 2)});
    CHECK(q_log_rational(op, Scalar(8), 24) == Rat(3, 2));
    CHECK(q_log_rational(op, Scalar(4), 24) == Rat(1));
    CHECK_FALSE(q_log_rational(op, Scalar(3), 4).has_value());
}

TEST_CASE("expand finds the worked solution through the dicritical step") {
    auto jets = expand(worked_eq(), Rat(2));
    // the golden jet and its conjugate
    CHECK(contains_series(jets, worked_solution()));
    auto conj = parse_series("- x + sqrt(11)*x^(3/2) - (121/30)*x^2");
    CHECK(contains_series(jets, conj));
    // the dicritical family at position 1 with special values -1 and -2
    bool family = false;
    for (const auto& j : jets) {
        if (j.status != JetStatus::dicritical_free_parameter)
            continue;
        if (j.parameter_position != Rat(1) || !j.series.is_zero())
            continue;
        family = true;
        REQUIRE(j.excluded.size() == 2);
        CHECK(((j.excluded[0] == Scalar(-1) && j.excluded[1] == Scalar(-2)) ||
               (j.excluded[0] == Scalar(-2) && j.excluded[1] == Scalar(-1))));
    }
    CHECK(family);
}

TEST_CASE("expand certifies the cusp jets") {
    auto p = parse_equation("-3*x^2 + 2*y*y1", differential_op());
    auto jets = expand(p, Rat(2));
    auto plus = parse_series("x^(3/2)");
    auto minus = parse_series("-x^(3/2)");
    CHECK(contains_series(jets, plus));
    CHECK(contains_series(jets, minus));
    for (const auto& j : jets)
        if (j.series == plus || j.series == minus) {
            CHECK(j.status == JetStatus::certified_extends);
            // exact solutions replay through the verifier with zero residual
            auto rep = verify_solution(p, j.series, 0);
            CHECK(rep.pass);
            CHECK(rep.exact_zero);
        }
}

TEST_CASE("q-difference monomial family") {
    // q^{p/n} y - y1 with q = 4, p = 1, n = 2: solutions c x^{1/2}
    auto op = q_difference_op(Scalar(4), Scalar(2), 2);
    auto p = parse_equation("2*y - y1", op);
    auto jets = expand(p, Rat(3));
    REQUIRE(!jets.empty());
    bool family = false;
    for (const auto& j : jets)
        if (j.status == JetStatus::dicritical_free_parameter &&
            j.parameter_position == Rat(1, 2))
            family = true;
    CHECK(family);
}

TEST_CASE("every jet replays through step with vanishing initial polynomials") {
    auto jets = expand(worked_eq(), Rat(2));
    for (const auto& j : jets) {
        if (j.series.is_zero())
            continue;
        CHECK_NOTHROW(verify_solution(worked_eq(), j.series, 0));
    }
}

TEST_CASE("expand is deterministic") {
    auto a = expand(worked_eq(), Rat(2));
    auto b = expand(worked_eq(), Rat(2));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].series == b[i].series);
        CHECK(a[i].status == b[i].status);
    }
}

TEST_CASE("verify_solution pass and fail") {
    auto p0 = worked_eq();
    auto rep = verify_solution(p0, worked_solution(), 4);
    CHECK(rep.pass);
    CHECK_FALSE(rep.exact_zero);
    REQUIRE(rep.residual_order.has_value());
    CHECK(*rep.residual_order > rep.threshold);

    // flip a_3 to +7: fails at k = 3
    auto bad = parse_series("- x + 7*x^(3/2) - (121/30)*x^2");
    auto rep2 = verify_solution(p0, bad, 4);
    CHECK_FALSE(rep2.pass);
    REQUIRE(rep2.failed_k.has_value());
    CHECK(*rep2.failed_k == 3);

    auto triv = verify_solution(parse_equation("y - x", differential_op()), parse_series("x"), 1);
    CHECK(triv.pass);
    CHECK(triv.exact_zero);
    CHECK(triv.horizontal_height >= 1);
}

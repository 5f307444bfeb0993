#include "doctest.h"

#include "puiseux/poly.hpp"

#include <random>

using namespace puiseux;

namespace {
Poly from_ints(std::initializer_list<long long> cs) {
    std::vector<Scalar> v;
    for (long long c : cs)
        v.push_back(Scalar(c));
    return Poly(std::move(v));
}
} // namespace

TEST_CASE("initial polynomial roots from the worked example") {
    // -C^3/2 + 11C/2 -> {0, sqrt(11), -sqrt(11)}
    Poly phi({Scalar(0), Scalar(Rat(11, 2)), Scalar(0), Scalar(Rat(-1, 2))});
    auto rr = find_roots(phi);
    REQUIRE(rr.complete());
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.total_multiplicity() == 3);
    Scalar s11 = Scalar::sqrt_of_int(11);
    bool has0 = false, hasP = false, hasM = false;
    for (auto& [r, m] : rr.roots) {
        CHECK(m == 1);
        if (r == Scalar(0))
            has0 = true;
        if (r == s11)
            hasP = true;
        if (r == -s11)
            hasM = true;
    }
    CHECK((has0 && hasP && hasM));

    // -15C - 121/2 -> {-121/30}
    Poly lin({Scalar(Rat(-121, 2)), Scalar(-15)});
    auto rl = find_roots(lin);
    REQUIRE(rl.roots.size() == 1);
    CHECK(rl.roots[0].first == Scalar(Rat(-121, 30)));

    // C^2 -> 0 with multiplicity 2
    auto r2 = find_roots(from_ints({0, 0, 1}));
    REQUIRE(r2.roots.size() == 1);
    CHECK(r2.roots[0].second == 2);
}

TEST_CASE("rational roots with multiplicities") {
    // (C-1)^2 (2C+3)
    Poly p = from_ints({1, -2, 1}) * from_ints({3, 2});
    auto rr = find_roots(p);
    REQUIRE(rr.complete());
    CHECK(rr.total_multiplicity() == 3);
    for (auto& [r, m] : rr.roots) {
        if (r == Scalar(1))
            CHECK(m == 2);
        else
            CHECK(r == Scalar(Rat(-3, 2)));
    }
}

TEST_CASE("irreducible cubic is flagged unsolved in exact mode") {
    Poly p = from_ints({-2, 0, 0, 1}); // C^3 - 2
    auto rr = find_roots(p);
    CHECK_FALSE(rr.complete());
    CHECK(rr.unsolved.degree() == 3);
    CHECK(rr.roots.empty());
    // numeric fallback finds all three
    auto nn = find_roots_numeric(p);
    CHECK(nn.total_multiplicity() == 3);
}

TEST_CASE("quadratic coefficients") {
    Scalar s2 = Scalar::sqrt_of_int(2);
    // (C - sqrt(2)) * (C + 1)
    Poly p({-s2, Scalar(1) - s2, Scalar(1)});
    auto rr = find_roots(p);
    REQUIRE(rr.complete());
    CHECK(rr.total_multiplicity() == 2);
    bool a = false, b = false;
    for (auto& [r, m] : rr.roots) {
        if (r == s2)
            a = true;
        if (r == Scalar(-1))
            b = true;
    }
    CHECK((a && b));
}

TEST_CASE("numeric root finder certifies residuals") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::uniform_int_distribution<int> coeff(-8, 8);
        int deg = 2 + static_cast<int>(rng() % 5);
        Poly p = Poly::constant(Scalar(1));
        std::vector<Scalar> planted;
        for (int i = 0; i < deg; ++i) {
            Scalar r = Scalar::complex(Real(coeff(rng)), Real(coeff(rng)));
            planted.push_back(r);
            p = p * Poly({-r, Scalar(1)});
        }
        auto rr = find_roots(p);
        CHECK(rr.total_multiplicity() == deg);
        for (const auto& want : planted) {
            bool found = false;
            for (auto& [r, m] : rr.roots)
                if ((r - want).abs_numeric() < Real("1e-40"))
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("numeric multiplicities via clustering") {
    // (C - 2)^3 (C + 1)
    Poly p = Poly::constant(Scalar::complex(Real(1), Real(0)));
    for (int i = 0; i < 3; ++i)
        p = p * Poly({Scalar(-2), Scalar(1)});
    p = p * Poly({Scalar(1), Scalar(1)});
    auto rr = find_roots(p);
    REQUIRE(rr.roots.size() == 2);
    long long m3 = 0;
    for (auto& [r, m] : rr.roots)
        if (m == 3)
            m3++;
    CHECK(m3 == 1);
    CHECK(rr.total_multiplicity() == 4);
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(find_roots(Poly()), scalar_error);
}

TEST_CASE("root count equals degree when complete") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 30; ++round) {
        // product of random linear rational factors
        int deg = 1 + static_cast<int>(rng() % 5);
        Poly p = Poly::constant(Scalar(2));
        for (int i = 0; i < deg; ++i) {
            long long num = static_cast<long long>(rng() % 11) - 5;
            long long den = 1 + static_cast<long long>(rng() % 4);
            p = p * Poly({Scalar(Rat(num, den)), Scalar(1)});
        }
        auto rr = find_roots(p);
        REQUIRE(rr.complete());
        CHECK(rr.total_multiplicity() == deg);
    }
}

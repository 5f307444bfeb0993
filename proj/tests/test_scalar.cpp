#include "doctest.h"

#include "puiseux/operator.hpp"
#include "puiseux/scalar.hpp"

using namespace puiseux;

TEST_CASE("rational arithmetic is exact") {
    Scalar a{Rat(1, 3)}, b{Rat(1, 6)};
    CHECK(a + b == Scalar(Rat(1, 2)));
    CHECK(a * b == Scalar(Rat(1, 18)));
    CHECK((a - a).is_zero());
    CHECK(a / b == Scalar(2));
    CHECK(Scalar(Rat(-121, 30)).str() == "-121/30");
}

TEST_CASE("squarefree decomposition") {
    auto [r, f] = squarefree_decompose(Int(72)); // 36 * 2
    CHECK(r == 6);
    CHECK(f == 2);
    auto [r2, f2] = squarefree_decompose(Int(-12));
    CHECK(r2 == 2);
    CHECK(f2 == -3);
    CHECK(sqrt_of_rat(Rat(4)) == Scalar(2));
    CHECK(sqrt_of_rat(Rat(1, 2)) == Scalar::quadratic(0, Rat(1, 2), 2));
}

TEST_CASE("quadratic extension arithmetic") {
    Scalar s11 = Scalar::sqrt_of_int(11);
    CHECK(s11.is_quadratic());
    CHECK(s11 * s11 == Scalar(11));
    Scalar x = Scalar(1) + s11;
    CHECK(x * x == Scalar(12) + Scalar(2) * s11);
    CHECK((x / x) == Scalar(1));
    CHECK((s11 - s11).is_zero());
    CHECK(s11.str() == "sqrt(11)");
    CHECK((-s11).str() == "-sqrt(11)");
    // sqrt(4) collapses to a rational
    CHECK(Scalar::sqrt_of_int(4) == Scalar(2));
    // mixing two extensions is an error
    CHECK_THROWS_AS(Scalar::sqrt_of_int(2) + Scalar::sqrt_of_int(3), scalar_error);
    // Gaussian rationals work as d = -1
    Scalar i = Scalar::sqrt_of_int(-1);
    CHECK(i * i == Scalar(-1));
}

TEST_CASE("exact square roots inside the tower") {
    Scalar q = Scalar(3) + Scalar(2) * Scalar::sqrt_of_int(2); // (1+sqrt 2)^2
    auto r = q.sqrt_exact();
    REQUIRE(r.has_value());
    CHECK(*r * *r == q);
    CHECK_FALSE(Scalar::sqrt_of_int(2).sqrt_exact().has_value()); // 2^(1/4) leaves the tower
}

TEST_CASE("numeric backend respects epsilon") {
    Scalar z = Scalar::complex(Real("1e-30"), Real(0)); // above 2^-128
    CHECK_FALSE(z.is_zero());
    Scalar tiny = Scalar::complex(boost::multiprecision::ldexp(Real(1), -200), Real(0));
    CHECK(tiny.is_zero());
    Scalar a = Scalar(Rat(1, 3)).to_numeric();
    Scalar b = Scalar::complex(Real(1) / Real(3), Real(0));
    CHECK(a == b);
}

TEST_CASE("delta coefficient per operator") {
    CHECK(delta_coeff(differential_op(), Rat(3, 2)) == Scalar(Rat(3, 2)));
    auto q4 = q_difference_op(Scalar(4));
    CHECK(delta_coeff(q4, Rat(1)) == Scalar(4));
    CHECK(delta_coeff(q4, Rat(1, 2)) == Scalar(2)); // principal square root
    auto q2 = q_difference_op(Scalar(2));
    CHECK(delta_coeff(q2, Rat(1, 2)) == Scalar::sqrt_of_int(2));
    CHECK(delta_coeff(q2, Rat(3, 2)) == Scalar(2) * Scalar::sqrt_of_int(2));
    // fixed non-principal root
    auto qr = q_difference_op(Scalar(4), Scalar(-2), 2);
    CHECK(delta_coeff(qr, Rat(1, 2)) == Scalar(-2));
    CHECK(delta_coeff(qr, Rat(1)) == Scalar(4));
    // numeric fallback keeps 256-bit accuracy
    auto q3 = q_difference_op(Scalar(5));
    Scalar d = delta_coeff(q3, Rat(1, 3));
    Scalar err = d * d * d - Scalar(5);
    CHECK(err.is_zero());
}

TEST_CASE("scalar powers") {
    CHECK(Scalar(Rat(1, 2)).pow(-3) == Scalar(8));
    CHECK(Scalar::sqrt_of_int(2).pow(4) == Scalar(4));
}

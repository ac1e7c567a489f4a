#include <catch_amalgamated.hpp>

#include <random>

#include "qma/laurent.hpp"

using namespace qma;

TEST_CASE("addition cancels and merges terms") {
    LaurentPoly q2 = LaurentPoly::q(2);
    CHECK((q2 + (-q2)).is_zero());
    CHECK((q2 - LaurentPoly::q(-2)) + LaurentPoly::q(-2) == q2);
    LaurentPoly a = LaurentPoly(1) + LaurentPoly::q(2);
    LaurentPoly b = LaurentPoly::q(2) + LaurentPoly::q(4);
    LaurentPoly sum = a + b;
    CHECK(sum.coefficient(0) == 1);
    CHECK(sum.coefficient(2) == 2);
    CHECK(sum.coefficient(4) == 1);
}

TEST_CASE("multiplication") {
    CHECK(LaurentPoly::q(2) * LaurentPoly::q(-2) == LaurentPoly::one());
    LaurentPoly skew = LaurentPoly::q(2) - LaurentPoly::q(-2);
    LaurentPoly sym = LaurentPoly::q(2) + LaurentPoly::q(-2);
    CHECK(skew * sym == LaurentPoly::q(4) - LaurentPoly::q(-4));
    CHECK((-LaurentPoly::q(2)) * (-LaurentPoly::q(2)) == LaurentPoly::q(4));
}

TEST_CASE("bar negates exponents and is an involutive ring map") {
    CHECK(LaurentPoly::q(2).bar() == LaurentPoly::q(-2));
    CHECK(LaurentPoly::one().bar() == LaurentPoly::one());
    LaurentPoly skew = LaurentPoly::q(2) - LaurentPoly::q(-2);
    CHECK(skew.bar() == -skew);
    LaurentPoly a = LaurentPoly(3) + LaurentPoly::q(-1);
    LaurentPoly b = LaurentPoly::q(5) - LaurentPoly(2);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
}

TEST_CASE("skew decomposition") {
    LaurentPoly h = -(LaurentPoly::q(2) - LaurentPoly::q(-2));
    LaurentPoly plus = skew_decompose(h);
    CHECK(plus == -LaurentPoly::q(2));
    CHECK(plus - plus.bar() == h);
    CHECK(skew_decompose(LaurentPoly()).is_zero());

    LaurentPoly big = LaurentPoly::q(4) + LaurentPoly::q(2) - LaurentPoly::q(-2) -
                      LaurentPoly::q(-4);
    LaurentPoly bp = skew_decompose(big);
    CHECK(bp == LaurentPoly::q(4) + LaurentPoly::q(2));
    CHECK(bp.in_q2_Zq2());
    CHECK(bp - bp.bar() == big);

    CHECK_THROWS_AS(skew_decompose(LaurentPoly::q(2) + LaurentPoly::q(-2)), error);
    CHECK_THROWS_AS(skew_decompose(LaurentPoly::q(1) - LaurentPoly::q(-1)), error);
}

TEST_CASE("rendering and exact round trip") {
    LaurentPoly p = -LaurentPoly::q(-2) + LaurentPoly::q(2);
    CHECK(p.str() == "-q^-2 + q^2");
    CHECK(LaurentPoly::parse(p.str()) == p);
    CHECK(LaurentPoly::parse("0").is_zero());
    CHECK(LaurentPoly::parse("1 - 3q") == LaurentPoly(1) - LaurentPoly::term(3, 1));
    CHECK(LaurentPoly::parse("5q^-3") == LaurentPoly::term(5, -3));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        LaurentPoly r;
        for (int k = 0; k < 4; ++k)
            r += LaurentPoly::term(int(rng() % 9) - 4, int(rng() % 13) - 6);
        CHECK(LaurentPoly::parse(r.str()) == r);
    }
}

TEST_CASE("big coefficients stay exact") {
    LaurentPoly p = LaurentPoly(1) + LaurentPoly::q(1);
    LaurentPoly pow = LaurentPoly::one();
    for (int t = 0; t < 64; ++t) pow = pow * p;
    CHECK(pow.coefficient(32) == Int("1832624140942590534"));
    CHECK(pow.eval_at_one() == Int(1) << 64);
}

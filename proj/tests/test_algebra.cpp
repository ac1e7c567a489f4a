#include <catch_amalgamated.hpp>

#include <random>

#include "qma/algebra.hpp"
#include "qma/suites.hpp"

using namespace qma;

namespace {
const Shape sh22{2, 2};

AlgebraElement gen(int i, int j) { return AlgebraElement::generator(sh22, i, j); }

ExponentMatrix e(int i, int j) { return ExponentMatrix::unit(sh22, i, j); }
}  // namespace

TEST_CASE("straightening the defining relations") {
    // Z21 Z12 -> Z12 Z21 (plain commutation)
    GeneratorWord w1{sh22, {{2, 1}, {1, 2}}};
    CHECK(straighten(w1) == AlgebraElement::monomial(e(1, 2) + e(2, 1)));

    // Z12 Z11 -> q^-2 Z11 Z12
    GeneratorWord w2{sh22, {{1, 2}, {1, 1}}};
    CHECK(straighten(w2) ==
          AlgebraElement::monomial(e(1, 1) + e(1, 2), LaurentPoly::q(-2)));

    // Z22 Z11 -> Z11 Z22 - (q^2 - q^-2) Z12 Z21
    GeneratorWord w3{sh22, {{2, 2}, {1, 1}}};
    AlgebraElement expect = AlgebraElement::monomial(e(1, 1) + e(2, 2));
    expect.add_term(e(1, 2) + e(2, 1), -q2_minus_q2inv());
    CHECK(straighten(w3) == expect);
}

TEST_CASE("multiplication agrees with the relations") {
    CHECK(gen(1, 1) * gen(2, 2) == AlgebraElement::monomial(e(1, 1) + e(2, 2)));
    AlgebraElement rev = gen(2, 2) * gen(1, 1);
    AlgebraElement expect = AlgebraElement::monomial(e(1, 1) + e(2, 2));
    expect.add_term(e(1, 2) + e(2, 1), -q2_minus_q2inv());
    CHECK(rev == expect);

    AlgebraElement x = gen(1, 2) * gen(2, 1) + LaurentPoly::q(3) * gen(1, 1);
    CHECK(x * AlgebraElement::one(sh22) == x);
    CHECK(AlgebraElement::one(sh22) * x == x);
}

TEST_CASE("powers through the quartic correction") {
    // Z22^2 Z11 = Z11 Z22^2 - (q^2-q^-2)(1+q^-4) Z12 Z21 Z22
    AlgebraElement z22sq = gen(2, 2) * gen(2, 2);
    AlgebraElement lhs = z22sq * gen(1, 1);
    AlgebraElement expect = AlgebraElement::monomial(e(1, 1) + e(2, 2).scaled(2));
    expect.add_term(e(1, 2) + e(2, 1) + e(2, 2),
                    -(q2_minus_q2inv() * (LaurentPoly(1) + LaurentPoly::q(-4))));
    CHECK(lhs == expect);
}

TEST_CASE("bar on monomials") {
    CHECK(bar(gen(1, 1)) == gen(1, 1));
    // bar(Z11 Z12) = q^-2 Z11 Z12
    AlgebraElement m = AlgebraElement::monomial(e(1, 1) + e(1, 2));
    CHECK(bar(m) == AlgebraElement::monomial(e(1, 1) + e(1, 2), LaurentPoly::q(-2)));
    // bar(Z11 Z22) = Z11 Z22 - (q^2-q^-2) Z12 Z21
    AlgebraElement d = AlgebraElement::monomial(e(1, 1) + e(2, 2));
    AlgebraElement expect = d;
    expect.add_term(e(1, 2) + e(2, 1), -q2_minus_q2inv());
    CHECK(bar(d) == expect);
}

TEST_CASE("normalization factors") {
    CHECK((e(1, 1) + e(2, 2)).normalization_exponent() == 0);
    CHECK((e(1, 1) + e(1, 2)).normalization_exponent() == -1);
    CHECK(e(1, 1).scaled(2).normalization_exponent() == 0);  // strict pairs only
    CHECK(normalized_monomial(e(1, 1) + e(1, 2)) ==
          AlgebraElement::monomial(e(1, 1) + e(1, 2), LaurentPoly::q(-1)));
}

TEST_CASE("lex order on exponent matrices") {
    CHECK(lex_compare(e(1, 1), e(1, 2)) > 0);
    CHECK(lex_compare(e(1, 1), e(1, 1)) == 0);
    CHECK(lex_compare(e(1, 1) + e(2, 2), e(1, 2) + e(2, 1)) > 0);
}

TEST_CASE("level by exhaustive subtraction") {
    CHECK(level(e(1, 2) + e(2, 1)) == 0);
    CHECK(level(e(1, 1) + e(2, 2)) == 1);
    CHECK(level((e(1, 1) + e(2, 2)).scaled(2)) == 2);
    // diag(1,1,1): subtract at (1,1)(2,2), then (1,2)(3,3), then (2,1)(3,2)
    Shape sh3{3, 3};
    ExponentMatrix a(sh3);
    a.at(1, 1) = 1;
    a.at(2, 2) = 1;
    a.at(3, 3) = 1;
    CHECK(level(a) == 3);
}

TEST_CASE("rendering and parsing round trip") {
    AlgebraElement x = gen(1, 1) * gen(2, 2);
    std::string s = render(x);
    CHECK(parse_element(sh22, s) == x);
    CHECK(render(AlgebraElement::zero(sh22)) == "0");
    CHECK(parse_element(sh22, "0") == AlgebraElement::zero(sh22));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        AlgebraElement r(sh22);
        for (int k = 0; k < 3; ++k) {
            LaurentPoly c;
            for (int u = 0; u < 2; ++u)
                c += LaurentPoly::term(int(rng() % 7) - 3, int(rng() % 9) - 4);
            r.add_term(random_matrix(sh22, 3, rng), c);
        }
        CHECK(parse_element(sh22, render(r)) == r);
    }
}

TEST_CASE("word confluence under a randomized strategy") {
    std::mt19937_64 rng(23);
    for (Shape sh : {Shape{2, 2}, Shape{3, 3}}) {
        for (int t = 0; t < 80; ++t) {
            GeneratorWord w = random_word(sh, 7, rng);
            CHECK(straighten(w) == straighten_randomized(w, rng));
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(straighten(GeneratorWord{sh22, {{3, 1}}}), error);
    Shape sh23{2, 3};
    CHECK_THROWS_AS(gen(1, 1) * AlgebraElement::one(sh23), error);
}

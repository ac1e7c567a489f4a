#include <catch_amalgamated.hpp>

#include "qma/minors.hpp"

using namespace qma;

namespace {
AlgebraElement gen(Shape sh, int i, int j) { return AlgebraElement::generator(sh, i, j); }
}

TEST_CASE("small minors in PBW form") {
    Shape sh{2, 2};
    CHECK(minor(sh, {{1}, {1}}) == gen(sh, 1, 1));

    AlgebraElement det = minor(sh, {{1, 2}, {1, 2}});
    ExponentMatrix diag(sh), anti(sh);
    diag.at(1, 1) = diag.at(2, 2) = 1;
    anti.at(1, 2) = anti.at(2, 1) = 1;
    AlgebraElement expect = AlgebraElement::monomial(diag);
    expect.add_term(anti, -LaurentPoly::q(2));
    CHECK(det == expect);
    CHECK(det == qdet(sh));

    Shape sh23{2, 3};
    AlgebraElement m = minor(sh23, {{1, 2}, {2, 3}});
    ExponentMatrix a(sh23), b(sh23);
    a.at(1, 2) = a.at(2, 3) = 1;
    b.at(1, 3) = b.at(2, 2) = 1;
    AlgebraElement expect23 = AlgebraElement::monomial(a);
    expect23.add_term(b, -LaurentPoly::q(2));
    CHECK(m == expect23);
}

TEST_CASE("qdet 3x3 has six alternating terms") {
    Shape sh{3, 3};
    AlgebraElement det = qdet(sh);
    CHECK(det.term_count() == 6);
    int plus = 0, minus = 0;
    for (const auto& [a, c] : det.terms()) {
        auto st = c.single_term();
        REQUIRE(st.has_value());
        CHECK((st->second == 1 || st->second == -1));
        (st->second == 1 ? plus : minus) += 1;
        CHECK(st->first % 2 == 0);
        (void)a;
    }
    CHECK(plus == 3);
    CHECK(minus == 3);
    CHECK_THROWS_AS(qdet(Shape{2, 3}), error);
}

TEST_CASE("row and column defining sums agree") {
    for (Shape sh : {Shape{2, 2}, Shape{3, 3}, Shape{2, 3}}) {
        std::vector<MinorSpec> specs = {{{1}, {1}}};
        if (sh.rows >= 2 && sh.cols >= 2) specs.push_back({{1, 2}, {1, 2}});
        if (sh.rows >= 3 && sh.cols >= 3) specs.push_back({{1, 3}, {2, 3}});
        for (auto& s : specs) CHECK(minor(sh, s) == minor_column_form(sh, s));
    }
}

TEST_CASE("sgn_q") {
    CHECK(sgn_q({1}, {1}).is_zero());
    CHECK(sgn_q({1}, {2}) == LaurentPoly::one());
    CHECK(sgn_q({2}, {1}) == -LaurentPoly::q(2));
}

TEST_CASE("Laplace expansions") {
    Shape sh2{2, 2};
    CHECK(verify_laplace_columns(sh2, {1, 2}, {1, 2}, {1}, {2}).pass);
    Shape sh3{3, 3};
    CHECK(verify_laplace_columns(sh3, {1, 2, 3}, {1, 2, 3}, {1}, {2, 3}).pass);
    CHECK(verify_laplace_rows(sh3, {1, 2, 3}, {1, 2, 3}, {1}, {2, 3}).pass);
    // empty second block reduces to the minor itself
    CHECK(verify_laplace_columns(sh3, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {}).pass);
    CHECK_THROWS_AS(verify_laplace_columns(sh3, {1, 2, 3}, {1, 2, 3}, {1}, {2}), error);
}

TEST_CASE("Parshall-Wang expansions") {
    Shape sh2{2, 2};
    for (auto& r : verify_pw_expansion(sh2, 1, 1)) CHECK(r.pass);
    for (auto& r : verify_pw_expansion(sh2, 1, 2)) CHECK(r.pass);
    Shape sh3{3, 3};
    for (auto& r : verify_pw_expansion(sh3, 2, 2)) CHECK(r.pass);
}

TEST_CASE("commutation exponents") {
    Shape sh{2, 2};
    CHECK(commutation_exponent(gen(sh, 1, 1), gen(sh, 1, 2)) == 1);
    CHECK_FALSE(commutation_exponent(gen(sh, 1, 1), gen(sh, 2, 2)).has_value());
    CHECK(commutation_exponent(qdet(sh), gen(sh, 1, 1)) == 0);
    // a scaled copy q-commutes with exponent 0
    AlgebraElement x = gen(sh, 1, 2) + LaurentPoly::q(1) * gen(sh, 2, 1);
    CHECK(commutation_exponent(x, x) == 0);
}

TEST_CASE("covariance profile of det_q(t)") {
    Shape sh{2, 2};
    auto grid = covariance_profile(sh, 1);  // element Z12
    CHECK(grid[0][0] == 1);
    CHECK(grid[1][1] == -1);
    CHECK(grid[0][1] == 0);
    CHECK(grid[1][0] == 0);

    Shape sh3{3, 3};
    auto g3 = covariance_profile(sh3, 3);  // the central determinant
    for (auto& row : g3)
        for (auto& v : row) CHECK(v == 0);

    Shape sh23{2, 3};
    auto g23 = covariance_profile(sh23, 2);
    auto expect = expected_covariance_profile(sh23, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            REQUIRE(g23[i][j].has_value());
            CHECK(*g23[i][j] == expect[i][j]);
        }
}

TEST_CASE("M-set construction") {
    Shape sh{2, 2};
    MSet m = mset(sh, 1, 1);
    CHECK(m.block_size == 2);
    CHECK(m.x_t == MinorSpec{{1}, {1}});
    CHECK(m.x_b == MinorSpec{{2}, {2}});
    CHECK(m.d == MinorSpec{{1, 2}, {1, 2}});
    CHECK(m.x_o.is_unit());
    CHECK(m.y_l == MinorSpec{{2}, {1}});
    CHECK(m.y_r == MinorSpec{{1}, {2}});

    Shape sh3{3, 3};
    MSet m3 = mset(sh3, 1, 1);
    CHECK(m3.block_size == 3);
    CHECK(m3.x_t == MinorSpec{{1, 2}, {1, 2}});
    CHECK(m3.x_b == MinorSpec{{2, 3}, {2, 3}});
    CHECK(m3.y_l == MinorSpec{{2, 3}, {1, 2}});
    CHECK(m3.y_r == MinorSpec{{1, 2}, {2, 3}});
    MSet m22 = mset(sh3, 2, 2);
    CHECK(m22.block_size == 2);

    CHECK_THROWS_AS(mset(sh, 2, 2), error);
}

TEST_CASE("M-set identities") {
    for (Shape sh : {Shape{2, 2}, Shape{3, 3}, Shape{2, 3}}) {
        for (int i = 1; i < sh.rows; ++i)
            for (int j = 1; j < sh.cols; ++j)
                for (auto& r : verify_mset_identities(sh, mset(sh, i, j))) {
                    INFO(r.identity << " " << r.index << " " << r.witness);
                    CHECK(r.pass);
                }
    }
}

TEST_CASE("minor input validation") {
    Shape sh{2, 2};
    CHECK_THROWS_AS(minor(sh, {{1, 2}, {1}}), error);
    CHECK_THROWS_AS(minor(sh, {{2, 1}, {1, 2}}), error);
    CHECK_THROWS_AS(minor(sh, {{1, 3}, {1, 2}}), error);
}

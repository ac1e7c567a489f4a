#include <catch_amalgamated.hpp>

#include "qma/cluster.hpp"

using namespace qma;

TEST_CASE("lambda measurement and degenerate cases") {
    Shape sh{2, 2};
    std::vector<AlgebraElement> gens = {
        AlgebraElement::generator(sh, 1, 1), AlgebraElement::generator(sh, 1, 2),
        AlgebraElement::generator(sh, 2, 1)};
    IntMatrix lam = lambda_of(gens);
    CHECK(lam[0][1] == 1);
    CHECK(lam[0][2] == 1);
    CHECK(lam[1][2] == 0);
    CHECK(lam[1][0] == -1);

    CHECK(lambda_of({qdet(sh)}) == IntMatrix{{0}});

    gens.push_back(AlgebraElement::generator(sh, 2, 2));
    CHECK_THROWS_AS(lambda_of(gens), error);  // Z11 vs Z22
}

TEST_CASE("compatibility of the M-set pair") {
    // variables (X_b, X_o, D, Y_r, Y_l) on the 2x2 block, with the canonical
    // column at X_b; d comes out as 2
    Shape sh{2, 2};
    std::vector<AlgebraElement> vars = {
        AlgebraElement::generator(sh, 2, 2), AlgebraElement::one(sh), qdet(sh),
        AlgebraElement::generator(sh, 1, 2), AlgebraElement::generator(sh, 2, 1)};
    IntMatrix lam = lambda_of(vars);
    IntMatrix b = {{0}, {-1}, {-1}, {1}, {1}};
    auto compat = check_compatible(lam, b, {0});
    REQUIRE(compat.ok);
    REQUIRE(compat.d.size() == 1);
    CHECK(compat.d[0] == 2);

    // vacuous when nothing is mutable
    auto trivial = check_compatible(lam, IntMatrix(5, std::vector<long long>{}), {});
    CHECK(trivial.ok);

    // corrupted B fails with a witness
    IntMatrix bad = b;
    bad[3][0] = -1;
    auto broken = check_compatible(lam, bad, {0});
    CHECK_FALSE(broken.ok);
    CHECK(broken.witness_j == 0);
}

TEST_CASE("BZ mutation along the exchange identity") {
    // hand-built 5-variable M-set seed on 2x2: mutating X_b = Z22 yields Z11
    Shape sh{2, 2};
    QuantumSeed s;
    s.shape = sh;
    auto add = [&](Point p, MinorSpec spec) {
        s.vars.push_back(SeedVariable{p, spec, true, minor(sh, spec), ""});
    };
    add({2, 2}, MinorSpec{{2}, {2}});          // X_b
    add({0, 0}, MinorSpec{});                  // X_o = 1
    add({1, 1}, MinorSpec{{1, 2}, {1, 2}});    // D
    add({1, 2}, MinorSpec{{1}, {2}});          // Y_r
    add({2, 1}, MinorSpec{{2}, {1}});          // Y_l
    std::vector<AlgebraElement> vals;
    for (auto& v : s.vars) vals.push_back(v.value);
    s.lambda = lambda_of(vals);
    s.ex = {0};
    s.b = {{0}, {-1}, {-1}, {1}, {1}};

    auto outcome = mutate(s, 0, minor(sh, {{1}, {1}}), /*remeasure=*/true);
    for (auto& c : outcome.checks) {
        INFO(c.identity << " " << c.witness);
        CHECK(c.pass);
    }
    CHECK(outcome.seed.vars[0].value == AlgebraElement::generator(sh, 1, 1));
    CHECK(outcome.seed.b[0][0] == 0);
    CHECK(outcome.seed.b[2][0] == 1);  // the column flips

    // involution on (Lambda, B)
    auto back = mutate(outcome.seed, 0);
    CHECK(back.seed.lambda == s.lambda);
    CHECK(back.seed.b == s.b);

    // a wrong candidate is rejected
    CHECK_THROWS_AS(mutate(s, 0, AlgebraElement::generator(sh, 1, 2)), error);
    // non-mutable index is rejected
    CHECK_THROWS_AS(mutate(s, 1), error);
}

TEST_CASE("base seed of the minimal line on 2x3") {
    Shape sh{2, 3};
    LineSeedEngine eng(sh);
    QuantumSeed s = eng.base_seed();
    REQUIRE(s.vars.size() == 6);
    // ordering: small-mutable (none for the minimal line), covariants at the
    // minimal-line points, then the S-point blocks
    CHECK(s.vars[0].point == Point{1, 3});
    CHECK(s.vars[1].point == Point{2, 1});
    CHECK(s.vars[2].point == Point{2, 2});
    CHECK(s.vars[3].point == Point{2, 3});
    CHECK(s.vars[4].point == Point{1, 1});
    CHECK(s.vars[5].point == Point{1, 2});
    CHECK(s.vars[4].spec == (MinorSpec{{1, 2}, {1, 2}}));
    CHECK(s.vars[5].spec == (MinorSpec{{1, 2}, {2, 3}}));
    // mutable: Z22 and Z23 (the frozen set is the maximal-line covariants)
    CHECK(s.ex == std::vector<int>({2, 3}));
    auto compat = check_compatible(s);
    REQUIRE(compat.ok);
    CHECK(compat.d == std::vector<long long>({2, 2}));
}

TEST_CASE("padding targets") {
    CHECK(pipeline_target(Shape{2, 3}).work == Shape{2, 3});
    CHECK(pipeline_target(Shape{3, 2}).work == Shape{3, 2});
    PipelineTarget t22 = pipeline_target(Shape{2, 2});
    CHECK(t22.work == Shape{2, 3});
    CHECK(t22.col_shift == 1);
    PipelineTarget t33 = pipeline_target(Shape{3, 3});
    CHECK(t33.work == Shape{3, 4});
    PipelineTarget t14 = pipeline_target(Shape{1, 4});
    CHECK(t14.work == Shape{5, 4});
    CHECK(t14.row_shift == 4);

    // the embedded minimal line is the work grid's minimal line
    Shape sh{2, 2};
    CHECK(embed_line(minimal_line(sh), t22) == minimal_line(Shape{2, 3}));
    BrokenLine wtop = embed_line(maximal_line(sh), t22);
    CHECK(render_line(wtop) == "(1,3)->(1,2)->(2,2)->(2,1)");
}

TEST_CASE("build_data on the embedded 2x2 maximal line") {
    Shape sh{2, 2};
    PipelineTarget tgt = pipeline_target(sh);
    LineSeedEngine eng(tgt.work);
    BrokenLine wl = embed_line(maximal_line(sh), tgt);
    const LineSeedData& data = eng.build(wl);
    for (auto& c : data.checks) {
        INFO(c.identity << " " << c.index << " " << c.witness);
        CHECK(c.pass);
    }
    CHECK(data.line == wl);
    LineFamily fam = family(wl);
    for (auto& v : data.full.vars) CHECK(v.spec == fam.at(v.point));
}

TEST_CASE("line mutation round trip on 2x3") {
    Shape sh{2, 3};
    LineSeedEngine eng(sh);
    BrokenLine top = maximal_line(sh);
    const LineSeedData& data = eng.build(top);
    for (auto& c : data.checks) {
        INFO(c.identity << " " << c.index << " " << c.witness);
        CHECK(c.pass);
    }
    std::vector<CheckResult> checks;
    QuantumSeed there = eng.line_mutate(data.full, top, minimal_line(sh), checks);
    QuantumSeed back = eng.line_mutate(there, minimal_line(sh), top, checks);
    for (auto& c : checks) {
        INFO(c.identity << " " << c.index << " " << c.witness);
        CHECK(c.pass);
    }
    CHECK(back.lambda == data.full.lambda);
    CHECK(back.b == data.full.b);
    for (size_t t = 0; t < back.vars.size(); ++t)
        CHECK(back.vars[t].value == data.full.vars[t].value);
}

TEST_CASE("diamond on the embedded 3x3") {
    Shape sh{3, 3};
    PipelineTarget tgt = pipeline_target(sh);
    LineSeedEngine eng(tgt.work);
    // a 3x3 line with two concave corners, embedded into 3x4
    BrokenLine two = parse_line(sh, "(1,3)->(1,2)->(2,2)->(2,1)->(3,1)");
    BrokenLine wl = embed_line(two, tgt);
    auto cs = concave_corners(wl);
    REQUIRE(cs.size() == 2);
    for (auto& c : diamond_check(eng, wl, cs[0], cs[1])) {
        INFO(c.identity << " " << c.index << " " << c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("reach_minor witnesses") {
    Shape sh{3, 3};
    BrokenLine top = maximal_line(sh);
    auto w1 = reach_minor(top, MinorSpec{{2}, {2}});
    CHECK(w1.path.front() == top);
    CHECK(w1.path.back() == w1.host);

    auto w2 = reach_minor(top, MinorSpec::contiguous(2, 2, 2));
    CHECK(!w2.path.empty());

    auto w3 = reach_minor(top, MinorSpec::contiguous(1, 1, 3));
    CHECK(w3.host == top);
    CHECK(w3.path.size() == 1);

    CHECK_THROWS_AS(reach_minor(top, MinorSpec{{1, 3}, {1, 2}}), error);
}

TEST_CASE("center search") {
    Shape sh{2, 2};
    LambdaOracle oracle(sh);
    CHECK(central_covariant_monomial(oracle, maximal_line(sh)).found);
    CHECK_FALSE(central_covariant_monomial(oracle, minimal_line(sh)).found);

    Shape rect{2, 3};
    LambdaOracle orect(rect);
    for (auto& l : enumerate_lines(2, 3))
        CHECK_FALSE(central_covariant_monomial(orect, l).found);
}

TEST_CASE("kernel of the maximal-line Lambda") {
    for (Shape sh : {Shape{2, 2}, Shape{3, 3}, Shape{2, 3}}) {
        LineSeedEngine eng(sh);
        CHECK(kernel_supported_on_covariants(eng));
    }
}

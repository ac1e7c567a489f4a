#include <catch_amalgamated.hpp>

#include "qma/lines.hpp"

using namespace qma;

TEST_CASE("enumeration of broken lines") {
    CHECK(enumerate_lines(2, 2).size() == 2);
    CHECK(enumerate_lines(2, 3).size() == 3);
    CHECK(enumerate_lines(1, 4).size() == 1);
    CHECK(enumerate_lines(3, 3).size() == 6);
    CHECK(enumerate_lines(4, 4).size() == 20);
    for (auto& l : enumerate_lines(3, 3)) validate_line(l);
}

TEST_CASE("extreme lines and regions") {
    Shape sh{3, 3};
    BrokenLine top = maximal_line(sh), bottom = minimal_line(sh);
    CHECK(render_line(top) == "(1,3)->(1,1)->(3,1)");
    CHECK(render_line(bottom) == "(1,3)->(3,3)->(3,1)");
    CHECK(region_points(top, Region::above).empty());
    CHECK(region_points(bottom, Region::below).empty());

    auto part = region_partition(parse_line(sh, "(1,3)->(2,3)->(2,1)->(3,1)"));
    CHECK(part.at(1, 1) == Region::above);
    CHECK(part.at(1, 2) == Region::above);
    CHECK(part.at(2, 2) == Region::line);
    CHECK(part.at(3, 2) == Region::below);
    CHECK(part.at(3, 3) == Region::below);
}

TEST_CASE("line parser round trip") {
    Shape sh{3, 4};
    for (auto& l : enumerate_lines(3, 4)) CHECK(parse_line(sh, render_line(l)) == l);
    CHECK_THROWS_AS(parse_line(sh, "(1,1)->(3,1)"), error);
}

TEST_CASE("partial order") {
    Shape sh{2, 2};
    auto lines = enumerate_lines(2, 2);
    CHECK(leq(minimal_line(sh), maximal_line(sh)));
    for (auto& l : lines) CHECK(leq(l, l));
    CHECK_FALSE(leq(maximal_line(sh), minimal_line(sh)));

    Shape sh3{3, 3};
    BrokenLine a = parse_line(sh3, "(1,3)->(2,3)->(2,1)->(3,1)");
    BrokenLine b = parse_line(sh3, "(1,3)->(1,2)->(3,2)->(3,1)");
    CHECK_FALSE(leq(a, b));
    CHECK_FALSE(leq(b, a));
    CHECK_THROWS_AS(leq(a, minimal_line(Shape{2, 2})), error);
}

TEST_CASE("up and down moves") {
    Shape sh{2, 2};
    BrokenLine bottom = minimal_line(sh);
    auto cs = convex_corners(bottom);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] == Point{2, 2});
    BrokenLine up = up_move(bottom, 2, 2);
    CHECK(up == maximal_line(sh));
    CHECK(down_move(up, 1, 1) == bottom);
    CHECK_THROWS_AS(up_move(bottom, 1, 2), error);
    CHECK_THROWS_AS(down_move(bottom, 2, 2), error);

    // closest-pair: nothing strictly between (3x3 sweep)
    auto lines = enumerate_lines(3, 3);
    for (auto& l : lines)
        for (Point c : convex_corners(l)) {
            BrokenLine u = up_move(l, c.row, c.col);
            CHECK(leq(l, u));
            for (auto& mid : lines) {
                if (mid == l || mid == u) continue;
                CHECK_FALSE((leq(l, mid) && leq(mid, u)));
            }
        }
}

TEST_CASE("meet and chains") {
    Shape sh{3, 3};
    BrokenLine a = parse_line(sh, "(1,3)->(2,3)->(2,1)->(3,1)");
    BrokenLine b = parse_line(sh, "(1,3)->(1,2)->(3,2)->(3,1)");
    BrokenLine m = meet(a, b);
    CHECK(leq(m, a));
    CHECK(leq(m, b));
    for (auto& l : enumerate_lines(3, 3))
        if (leq(l, a) && leq(l, b)) CHECK(leq(l, m));

    auto chain = up_chain(minimal_line(sh), maximal_line(sh));
    CHECK(chain.size() == 5);  // 4 cells of S removed one at a time
    for (size_t t = 1; t < chain.size(); ++t) CHECK(leq(chain[t - 1], chain[t]));
}

TEST_CASE("families of the extreme lines") {
    Shape sh{2, 2};
    LineFamily top = family(maximal_line(sh));
    CHECK(top.at(1, 1) == MinorSpec{{1}, {1}});
    CHECK(top.at(1, 2) == MinorSpec{{1}, {2}});
    CHECK(top.at(2, 1) == MinorSpec{{2}, {1}});
    CHECK(top.at(2, 2) == (MinorSpec{{1, 2}, {1, 2}}));

    LineFamily bottom = family(minimal_line(sh));
    CHECK(bottom.at(1, 2) == MinorSpec{{1}, {2}});
    CHECK(bottom.at(2, 1) == MinorSpec{{2}, {1}});
    CHECK(bottom.at(2, 2) == MinorSpec{{2}, {2}});
    CHECK(bottom.at(1, 1) == (MinorSpec{{1, 2}, {1, 2}}));  // the S-point block

    // the closed form of the maximal-line family on 3x4
    Shape sh34{3, 4};
    LineFamily t34 = family(maximal_line(sh34));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) {
            MinorSpec expect;
            if (i >= j) {
                for (int t = 0; t < j; ++t) {
                    expect.rows.push_back(i - j + 1 + t);
                    expect.cols.push_back(1 + t);
                }
            } else {
                for (int t = 0; t < i; ++t) {
                    expect.rows.push_back(1 + t);
                    expect.cols.push_back(j - i + 1 + t);
                }
            }
            CHECK(t34.at(i, j) == expect);
        }
}

TEST_CASE("point classification") {
    Shape sh{3, 3};
    BrokenLine mid = parse_line(sh, "(1,3)->(2,3)->(2,1)->(3,1)");
    // concave corners are repulsive, (m,n) is repulsive
    for (Point c : concave_corners(mid))
        CHECK(classify_point(mid, c.row, c.col) == PointKind::repulsive);
    CHECK(classify_point(mid, 3, 3) == PointKind::repulsive);
    // an interior point with companions above and to the right
    CHECK(classify_point(mid, 3, 2) == PointKind::attractive);
    CHECK_THROWS_AS(classify_point(mid, 1, 1), error);
}

TEST_CASE("covariant set") {
    Shape sh{2, 2};
    auto cov = covariant_set(maximal_line(sh));
    REQUIRE(cov.size() == 3);
    CHECK(cov[0].second == MinorSpec{{1}, {2}});
    CHECK(cov[1].second == (MinorSpec{{1, 2}, {1, 2}}));
    CHECK(cov[2].second == MinorSpec{{2}, {1}});
    for (auto& l : enumerate_lines(3, 4))
        CHECK(covariant_set(l).size() == 6);
}

TEST_CASE("ascii rendering") {
    Shape sh{3, 3};
    BrokenLine mid = parse_line(sh, "(1,3)->(2,3)->(2,1)->(3,1)");
    CHECK(ascii_regions(mid) == "SSL\nLLL\nLTT\n");
}

#include <cmath>

#include "doctest.h"
#include "lowdisc/generators.hpp"
#include "lowdisc/linf.hpp"

using namespace lowdisc;
using namespace lowdisc::linf;

TEST_CASE("critical grid construction") {
    PointSet P = make_point_set({{0.5, 0.25}, {0.5, 0.75}});
    GridSlice g = GridSlice::build(P);
    REQUIRE(g.gamma.size() == 2);
    CHECK(g.gamma[0] == std::vector<double>{0.5, 1.0});
    CHECK(g.gamma[1] == std::vector<double>{0.25, 0.75, 1.0});
    CHECK(g.rank[0][0] == 0);
    CHECK(g.rank[0][1] == 0);
    CHECK(g.rank[1][0] == 0);
    CHECK(g.rank[1][1] == 1);

    // a coordinate at 1 must not duplicate the appended grid line
    PointSet Q = make_point_set({{1.0}, {0.5}});
    CHECK(GridSlice::build(Q).gamma[0] == std::vector<double>{0.5, 1.0});

    CHECK(estimate_boxes(gen::random_set(10, 3, 1)) == 11 * 11 * 11);
}

TEST_CASE("hand-checked values") {
    // single point at the center: the closed box [0, 1/2]^2 wins, 1 - 1/4
    CHECK(linf_star_exact(make_point_set({{0.5, 0.5}})) == 0.75);
    // two points, d = 1: every corner gives exactly 1/4
    CHECK(linf_star_exact(make_point_set({{0.25}, {0.75}})) == 0.25);
    // duplicates are legal
    CHECK(linf_star_exact(make_point_set({{0.5}, {0.5}})) == 0.5);
}

TEST_CASE("enumerator equals the brute-force oracle") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::size_t n = 2 + seed % 7;
        std::size_t d = 1 + seed % 3;
        PointSet P = gen::random_set(n, d, seed);
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(seed);
        CHECK(linf_star_exact(P) == linf_star_naive(P));
    }
}

TEST_CASE("2-D sweep equals the enumerator") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        PointSet P = gen::random_set(5 + 13 * (seed % 5), 2, seed);
        CHECK(linf_star_2d(P) == linf_star_exact(P));
    }
    PointSet fib = gen::fibonacci_set(89);
    CHECK(linf_star_2d(fib) == linf_star_exact(fib));
    CHECK_THROWS_AS(linf_star_2d(gen::random_set(5, 3, 1)), WrongDimension);
}

TEST_CASE("pruning changes the work, never the value") {
    Options pruned;
    Options blunt;
    blunt.prune = false;
    for (std::uint64_t seed = 50; seed < 56; ++seed) {
        PointSet P = gen::random_set(12, 3, seed);
        EnumStats sp, sb;
        double vp = linf_star_exact(P, pruned, &sp);
        double vb = linf_star_exact(P, blunt, &sb);
        CHECK(vp == vb);
        CHECK(sb.boxes_visited == sb.boxes_total);
        CHECK(sp.boxes_visited <= sb.boxes_visited);
        CHECK(sp.boxes_total == estimate_boxes(P));
        CHECK(sp.pruned_fraction >= 0.0);
        CHECK(sp.pruned_fraction <= 1.0);
    }
}

TEST_CASE("budget guard") {
    PointSet P = gen::random_set(20, 2, 3);
    Options o;
    o.budget = 10;
    try {
        linf_star_exact(P, o);
        CHECK(false);
    } catch (const BudgetExceeded& e) {
        CHECK(e.estimated_boxes == 21 * 21);
    }
}

TEST_CASE("dispatch picks the sweep in 2-D") {
    PointSet P2 = gen::fibonacci_set(144);
    CHECK(linf_star(P2) == linf_star_2d(P2));
    PointSet P3 = gen::random_set(9, 3, 4);
    CHECK(linf_star(P3) == linf_star_exact(P3));
}

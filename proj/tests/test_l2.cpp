#include <cmath>
#include <vector>

#include "doctest.h"
#include "lowdisc/generators.hpp"
#include "lowdisc/l2.hpp"
#include "lowdisc/rng.hpp"

using namespace lowdisc;
using namespace lowdisc::l2;

namespace {

// fixed instances with exact rational discrepancies (independent derivation)
const std::vector<std::vector<double>> kA = {{0.5, 0.5}};
const std::vector<std::vector<double>> kB = {{0.2}, {0.7}};
const std::vector<std::vector<double>> kC = {{0.1, 0.8}, {0.4, 0.3}, {0.9, 0.6}};

PointSet interior_random(std::size_t n, std::size_t d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> c(n * d);
    for (double& v : c) v = 0.05 + 0.9 * rng.next_double();
    return make_point_set(n, d, std::move(c));
}

double fd_slot(PointSet P, DiscrepancyKind kind, std::size_t slot, double tau) {
    const double h = 1e-6;
    P.coords[slot] += h;
    double up = l2_loss_smoothed(P, kind, {tau});
    P.coords[slot] -= 2 * h;
    double dn = l2_loss_smoothed(P, kind, {tau});
    return (up - dn) / (2 * h);
}

}  // namespace

TEST_CASE("closed forms match independently derived rationals") {
    CHECK(l2_star_sq(make_point_set(kA)).squared ==
          doctest::Approx(23.0 / 288.0).epsilon(1e-15));
    CHECK(l2_star_sq(make_point_set(kB)).squared ==
          doctest::Approx(7.0 / 300.0).epsilon(1e-15));
    CHECK(l2_star_sq(make_point_set(kC)).squared ==
          doctest::Approx(341.0 / 22500.0).epsilon(1e-15));

    CHECK(l2_periodic_sq(make_point_set(kA)).squared ==
          doctest::Approx(5.0 / 36.0).epsilon(1e-15));
    CHECK(l2_periodic_sq(make_point_set(kB)).squared ==
          doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    CHECK(l2_periodic_sq(make_point_set(kC)).squared ==
          doctest::Approx(113.0 / 3750.0).epsilon(1e-15));

    CHECK(l2_extreme_sq(make_point_set(kA)).squared ==
          doctest::Approx(11.0 / 288.0).epsilon(1e-15));
    CHECK(l2_extreme_sq(make_point_set(kB)).squared ==
          doctest::Approx(1.0 / 48.0).epsilon(1e-15));
    CHECK(l2_extreme_sq(make_point_set(kC)).squared ==
          doctest::Approx(77.0 / 18000.0).epsilon(1e-15));
}

TEST_CASE("single point identities") {
    // extreme, n = 1, d = 1: exactly 1/12 independent of the coordinate
    CHECK(l2_extreme_sq(make_point_set({{0.3}})).squared ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(l2_extreme_sq(make_point_set({{0.77}})).squared ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    // periodic, n = 1, d = 1: exactly 1/6, translation invariant
    CHECK(l2_periodic_sq(make_point_set({{0.3}})).squared ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    // star, n = 1, d = 1, x = 1/2: exactly 1/12
    CHECK(l2_star_sq(make_point_set({{0.5}})).squared ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("evaluate dispatch") {
    PointSet P = make_point_set(kC);
    CHECK(evaluate(P, DiscrepancyKind::L2Star).squared == l2_star_sq(P).squared);
    CHECK(evaluate(P, DiscrepancyKind::L2Periodic).squared == l2_periodic_sq(P).squared);
    CHECK(evaluate(P, DiscrepancyKind::L2Extreme).squared == l2_extreme_sq(P).squared);
    CHECK_THROWS_AS(evaluate(P, DiscrepancyKind::LInfStar), KindUnsupported);

    L2Value v = evaluate(P, DiscrepancyKind::L2Star);
    CHECK(v.root == std::sqrt(v.squared));
    CHECK(make_l2_value(-1e-18).root == 0.0);  // rounding dip floors at zero
}

TEST_CASE("smooth surrogates") {
    const double tau = 1e-15;
    for (auto [a, b] : {std::pair{0.3, 0.7}, {0.5, 0.5}, {0.0, 1.0}, {0.9, 0.1}}) {
        CHECK(smax(a, b, tau) >= std::max(a, b));
        CHECK(smin(a, b, tau) <= std::min(a, b));
        CHECK(smax(a, b, tau) - std::max(a, b) <= 0.5 * std::sqrt(tau) + 1e-16);
        CHECK(smin(a, b, tau) + smax(a, b, tau) == a + b);  // exact by construction
    }
    CHECK(sabs(0.0, tau) == std::sqrt(tau));
    CHECK(sabs(-0.25, tau) >= 0.25);

    // smoothed loss tracks the exact squared value
    for (auto kind : {DiscrepancyKind::L2Star, DiscrepancyKind::L2Periodic,
                      DiscrepancyKind::L2Extreme}) {
        PointSet P = interior_random(20, 2, 5);
        double ex = evaluate(P, kind).squared;
        double sm = l2_loss_smoothed(P, kind, {tau});
        CHECK(std::abs(sm - ex) < 1e-6);
    }
}

TEST_CASE("analytic gradient matches finite differences") {
    const double tau = 1e-15;
    for (auto kind : {DiscrepancyKind::L2Star, DiscrepancyKind::L2Periodic,
                      DiscrepancyKind::L2Extreme}) {
        CAPTURE(kind_name(kind));
        PointSet P = interior_random(6, 2, 7);
        std::vector<double> g = l2_grad(P, kind, {tau});
        REQUIRE(g.size() == P.n * P.d);
        double gmax = 0.0;
        for (double v : g) gmax = std::max(gmax, std::abs(v));
        REQUIRE(gmax > 0.0);
        for (std::size_t s = 0; s < g.size(); ++s) {
            double fd = fd_slot(P, kind, s, tau);
            CHECK(std::abs(g[s] - fd) < 1e-5 * std::max({std::abs(fd), gmax, 1e-10}));
        }
    }
}

TEST_CASE("gradient stays finite on the cube boundary") {
    // division-free rest products: zero factors must not produce NaN
    PointSet P = make_point_set({{0.0, 1.0}, {1.0, 0.0}, {0.5, 0.5}, {0.0, 0.0}});
    for (auto kind : {DiscrepancyKind::L2Star, DiscrepancyKind::L2Periodic,
                      DiscrepancyKind::L2Extreme}) {
        for (double v : l2_grad(P, kind, {1e-15})) CHECK(std::isfinite(v));
    }
    CHECK_THROWS_AS(l2_grad(P, DiscrepancyKind::LInfStar, {1e-15}), KindUnsupported);
}

TEST_CASE("quadrature oracle agrees with the closed forms in 1-D and 2-D") {
    for (auto kind : {DiscrepancyKind::L2Star, DiscrepancyKind::L2Periodic,
                      DiscrepancyKind::L2Extreme}) {
        CAPTURE(kind_name(kind));
        for (const auto& rows : {kA, kB, kC}) {
            PointSet P = make_point_set(rows);
            CHECK(std::abs(quadrature_oracle(P, kind) - evaluate(P, kind).squared) <
                  1e-12);
        }
        PointSet R = interior_random(9, 2, 11);
        CHECK(std::abs(quadrature_oracle(R, kind) - evaluate(R, kind).squared) < 1e-12);
    }
}

TEST_CASE("quadrature oracle guards") {
    PointSet P3 = interior_random(3, 3, 13);
    CHECK_THROWS_AS(quadrature_oracle(P3, DiscrepancyKind::L2Periodic), TooExpensive);
    CHECK_THROWS_AS(quadrature_oracle(P3, DiscrepancyKind::L2Extreme), TooExpensive);
    CHECK_THROWS_AS(quadrature_oracle(P3, DiscrepancyKind::LInfStar), KindUnsupported);
    // m^d * n above the cell budget
    CHECK_THROWS_AS(quadrature_oracle(P3, DiscrepancyKind::L2Star, 512), TooExpensive);
    // exact cell integration is quadratic in n with a 64-point bitmask
    PointSet big = interior_random(65, 2, 17);
    CHECK_THROWS_AS(quadrature_oracle(big, DiscrepancyKind::L2Star), TooExpensive);
}

TEST_CASE("midpoint rule converges on the 3-D star closed form") {
    PointSet P3 = interior_random(3, 3, 13);
    double ex = l2_star_sq(P3).squared;
    double e64 = std::abs(quadrature_oracle(P3, DiscrepancyKind::L2Star, 64) - ex);
    double e256 = std::abs(quadrature_oracle(P3, DiscrepancyKind::L2Star, 256) - ex);
    CHECK(e64 < 0.05 * ex);
    CHECK(e256 < 0.02 * ex);
    CHECK(e256 < e64);
}

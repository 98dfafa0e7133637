#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "lowdisc/generators.hpp"

using namespace lowdisc;
using namespace lowdisc::gen;

TEST_CASE("fibonacci set") {
    PointSet P = fibonacci_set(5);
    REQUIRE(P.n == 5);
    REQUIRE(P.d == 2);
    CHECK(P.x(0, 0) == 0.0);
    CHECK(P.x(0, 1) == 0.0);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(P.x(i, 0) == double(i) / 5.0);
        CHECK(P.x(i, 1) >= 0.0);
        CHECK(P.x(i, 1) < 1.0);
    }

    // same code path as the kronecker lattice at the golden ratio
    PointSet K = kronecker_lattice(5, (1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(P.coords == K.coords);
}

TEST_CASE("kronecker lattice at sqrt(2)") {
    PointSet P = kronecker_lattice(4, std::sqrt(2.0));
    CHECK(P.x(2, 0) == 0.5);
    CHECK(P.x(3, 1) == doctest::Approx(0.24264068711928566).epsilon(1e-15));
    CHECK_THROWS_AS(kronecker_lattice(0, std::sqrt(2.0)), Error);
}

TEST_CASE("fibonacci integration lattice") {
    // k = 7: F_7 = 13 points, generator F_6 = 8, so point 1 is (1/13, 8/13)
    PointSet P = fibonacci_integration_lattice(7);
    REQUIRE(P.n == 13);
    CHECK(P.x(1, 0) == doctest::Approx(1.0 / 13.0).epsilon(1e-16));
    CHECK(P.x(1, 1) == doctest::Approx(8.0 / 13.0).epsilon(1e-16));
    CHECK(P.x(0, 0) == 0.0);
    CHECK(P.x(0, 1) == 0.0);

    CHECK(fibonacci_integration_lattice(13).n == 233);

    CHECK_THROWS_AS(fibonacci_integration_lattice(1), IndexTooLarge);
    CHECK_THROWS_AS(fibonacci_integration_lattice(93), IndexTooLarge);
}

TEST_CASE("random set determinism") {
    PointSet A = random_set(20, 3, 99);
    PointSet B = random_set(20, 3, 99);
    PointSet C = random_set(20, 3, 100);
    REQUIRE(A.n == 20);
    REQUIRE(A.d == 3);
    CHECK(A.coords == B.coords);
    CHECK(A.coords != C.coords);
    for (double c : A.coords) {
        CHECK(c >= 0.0);
        CHECK(c < 1.0);
    }
}

TEST_CASE("sobol sequence matches the published prefix") {
    SobolParams sp;
    sp.d = 3;
    PointSet P = sobol_set(8, sp);
    const double want[8][3] = {
        {0, 0, 0},
        {0.5, 0.5, 0.5},
        {0.75, 0.25, 0.25},
        {0.25, 0.75, 0.75},
        {0.375, 0.375, 0.625},
        {0.875, 0.875, 0.125},
        {0.625, 0.125, 0.875},
        {0.125, 0.625, 0.375},
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 3; ++k) CHECK(P.x(i, k) == want[i][k]);

    SUBCASE("skip drops the leading elements") {
        sp.skip = 2;
        PointSet Q = sobol_set(3, sp);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) CHECK(Q.x(i, k) == want[i + 2][k]);
    }

    SUBCASE("embedded table covers d <= 16 only") {
        CHECK(sobol_default_table().id == "joe-kuo-6.21201");
        CHECK(sobol_default_table().max_dim() == 16);
        sp.d = 17;
        CHECK_THROWS_AS(sobol_set(4, sp), DimensionUnsupported);
        sp.d = 0;
        CHECK_THROWS_AS(sobol_set(4, sp), DimensionUnsupported);
    }
}

TEST_CASE("sobol values carry 52-bit precision") {
    SobolParams sp;
    sp.d = 2;
    PointSet P = sobol_set(64, sp);
    for (double c : P.coords) {
        double scaled = std::ldexp(c, 52);
        CHECK(scaled == std::floor(scaled));  // exact multiple of 2^-52
        CHECK(c >= 0.0);
        CHECK(c < 1.0);
    }
}

TEST_CASE("external direction-number tables") {
    auto path = std::filesystem::temp_directory_path() / "lowdisc_dirs.txt";
    {
        std::ofstream f(path);
        f << "d       s       a       m_i\n";
        f << "2       1       0       1\n";
        f << "3       2       1       1 3\n";
    }
    SobolTable t = load_sobol_table(path);
    CHECK(t.id == "lowdisc_dirs.txt");
    REQUIRE(t.dims.size() == 2);
    CHECK(t.max_dim() == 3);
    CHECK(t.dims[1].s == 2);
    CHECK(t.dims[1].a == 1);
    CHECK(t.dims[1].m == std::vector<std::uint32_t>{1, 3});

    // first three dimensions agree with the embedded table, so the points do
    SobolParams ext;
    ext.d = 3;
    ext.table = &t;
    SobolParams emb;
    emb.d = 3;
    CHECK(sobol_set(32, ext).coords == sobol_set(32, emb).coords);

    {
        std::ofstream f(path);
        f << "2 1 0 2\n";  // even m is invalid
    }
    CHECK_THROWS_AS(load_sobol_table(path), ParseError);
    {
        std::ofstream f(path);
        f << "3 1 0 1\n";  // must start at dimension 2
    }
    CHECK_THROWS_AS(load_sobol_table(path), ParseError);
    std::filesystem::remove(path);
}

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "floquet_echo/errors.hpp"
#include "floquet_echo/models.hpp"
#include "test_support.hpp"

using namespace floquet_echo;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("chain mode coefficients", "[models]") {
    DriveParams drive;  // h = 1, A = 1, phi0 = 0
    drive.omega0 = 2.0;
    SECTION("k = 0 at t = 0: field 2, cos k = 1") {
        const CoefficientVector a = ising_mode_coeffs(0.0, drive, 0.0);
        CHECK(a.x == 0.0);
        CHECK(a.y == 0.0);
        CHECK_THAT(a.z, WithinAbs(-1.0, 1e-15));
    }
    SECTION("k = pi/2 at a quarter period: field h") {
        const CoefficientVector a = ising_mode_coeffs(kPi / 2, drive, drive.tau() / 4);
        CHECK_THAT(a.y, WithinAbs(1.0, 1e-15));
        CHECK_THAT(a.z, WithinAbs(-1.0, 1e-15));
    }
    SECTION("phase offset shifts the drive") {
        DriveParams shifted = drive;
        shifted.phi0 = kPi;
        CHECK_THAT(shifted.field(0.0), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("coefficients are periodic and ax vanishes for the chain", "[models][property]") {
    for (int trial = 0; trial < 200; ++trial) {
        DriveParams drive{testing::uniform(-2, 2), testing::uniform(-2, 2), testing::uniform(0.1, 20),
                          testing::uniform(-3, 3)};
        const double k = testing::uniform(0, kPi);
        const double t = testing::uniform(0, 10);
        const CoefficientVector a = ising_mode_coeffs(k, drive, t);
        const CoefficientVector b = ising_mode_coeffs(k, drive, t + drive.tau());
        CHECK(a.x == 0.0);
        CHECK_THAT(a.y, WithinAbs(b.y, 1e-12));
        CHECK_THAT(a.z, WithinAbs(b.z, 1e-12));
        CHECK(a.norm() <= max_coefficient_norm(drive) + 1e-12);

        DiracParams p{testing::uniform(-2, 2), testing::uniform(0.1, 20), testing::uniform(0.1, 2), 1.0};
        const double kx = testing::uniform(0, kPi), ky = testing::uniform(0, kPi);
        const CoefficientVector d = dirac_mode_coeffs(kx, ky, p, t);
        const CoefficientVector e = dirac_mode_coeffs(kx, ky, p, t + p.tau());
        CHECK_THAT(d.z, WithinAbs(e.z, 1e-12));
        CHECK(d.norm() <= max_coefficient_norm(p) + 1e-12);
        // kx <-> ky swaps x and y components only
        const CoefficientVector s = dirac_mode_coeffs(ky, kx, p, t);
        CHECK(s.x == d.y);
        CHECK(s.y == d.x);
        CHECK(s.z == d.z);
    }
}

TEST_CASE("Dirac mass oscillates as a cosine", "[models]") {
    DiracParams p;
    p.m0 = 2.0;
    p.omega0 = 4.0;
    CHECK_THAT(dirac_mode_coeffs(0.3, 0.4, p, 0.0).z, WithinAbs(2.0, 1e-15));
    CHECK_THAT(dirac_mode_coeffs(0.3, 0.4, p, p.tau() / 2).z, WithinAbs(-2.0, 1e-14));
    CHECK_THAT(dirac_mode_coeffs(0.3, 0.4, p, 0.0).x, WithinAbs(0.3, 1e-15));
}

TEST_CASE("antiperiodic chain grid", "[models]") {
    const MomentumGrid1D g = grid_1d(8);
    REQUIRE(g.ks.size() == 4);
    CHECK_THAT(g.ks[0], WithinAbs(kPi / 8, 1e-15));
    CHECK_THAT(g.ks[1], WithinAbs(3 * kPi / 8, 1e-15));
    CHECK_THAT(g.ks[3], WithinAbs(7 * kPi / 8, 1e-15));
    CHECK(grid_1d(1000).ks.size() == 500);
    CHECK_THROWS_AS(grid_1d(6), InputError);
    CHECK_THROWS_AS(grid_1d(0), InputError);
}

TEST_CASE("quadrant grid for the Dirac model", "[models]") {
    const MomentumGrid2D g = grid_2d(2);
    REQUIRE(g.pairs.size() == 4);
    CHECK_THAT(g.pairs[0].first, WithinAbs(kPi / 4, 1e-15));
    CHECK_THAT(g.pairs[0].second, WithinAbs(kPi / 4, 1e-15));
    CHECK_THAT(g.pairs[1].first, WithinAbs(kPi / 4, 1e-15));
    CHECK_THAT(g.pairs[1].second, WithinAbs(3 * kPi / 4, 1e-15));
    CHECK_THAT(g.pairs[2].first, WithinAbs(3 * kPi / 4, 1e-15));
    const MomentumGrid2D h = grid_2d(3, 0.5);
    CHECK(h.pairs.size() == 9);
    CHECK_THAT(h.pairs.back().first, WithinAbs(2 * kPi / 3 * 2.5, 1e-14));
    CHECK_THROWS_AS(grid_2d(1), InputError);
    CHECK_THROWS_AS(grid_2d(4, 0.0), InputError);
}

TEST_CASE("parameter validation and step defaults", "[models]") {
    DriveParams drive;
    drive.omega0 = 0.0;
    CHECK_THROWS_AS(drive.validate(), InputError);
    drive.omega0 = 1.0;
    drive.h = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(drive.validate(), InputError);

    DriveParams fast;
    fast.omega0 = 100.0;
    CHECK(default_steps(fast) == 512);
    DriveParams slow;
    slow.omega0 = 0.1;
    // 64 * tau * 3 / 2pi = 64 * 3 / 0.1
    CHECK(default_steps(slow) == 1920);
}

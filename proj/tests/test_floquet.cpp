#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "floquet_echo/errors.hpp"
#include "floquet_echo/floquet.hpp"
#include "floquet_echo/models.hpp"
#include "test_support.hpp"

using namespace floquet_echo;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

CoefficientFn ising_mode(double k, const DriveParams& drive) {
    return [k, drive](double t) { return ising_mode_coeffs(k, drive, t); };
}

Unitary2 spectral_rebuild(const FloquetMode& m) {
    const Complex em = std::exp(Complex{0.0, -m.theta});
    const Complex ep = std::exp(Complex{0.0, m.theta});
    auto outer = [](const State2& s, int r, int c) {
        const Complex a = r == 0 ? s.c0 : s.c1;
        const Complex b = c == 0 ? s.c0 : s.c1;
        return a * std::conj(b);
    };
    Unitary2 u;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) u(r, c) = em * outer(m.phi_plus, r, c) + ep * outer(m.phi_minus, r, c);
    }
    return u;
}

}  // namespace

TEST_CASE("propagate_period with a constant Hamiltonian collapses to one exponential", "[floquet]") {
    const CoefficientVector a{0.3, 0.4, 0.0};
    const CoefficientFn constant = [a](double) { return a; };
    for (std::size_t steps : {1u, 2u, 7u, 64u, 1000u}) {
        for (Integrator scheme : {Integrator::midpoint, Integrator::magnus4}) {
            CHECK(max_abs_diff(propagate_period(constant, 2.0, steps, scheme), su2_exp(a, 2.0)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(propagate_period(constant, 2.0, 0), InputError);
}

TEST_CASE("commuting mode at k = pi integrates analytically", "[floquet]") {
    // a(t) = (0, 0, -(1 + cos w t) - 1); its time integral over one period is -2 tau.
    DriveParams drive;
    drive.omega0 = 1.3;
    const double tau = drive.tau();
    const Unitary2 exact = su2_exp({0, 0, -2.0}, tau);  // exp(+2 i tau sz)
    for (Integrator scheme : {Integrator::midpoint, Integrator::magnus4}) {
        const Unitary2 u = propagate_period(ising_mode(kPi, drive), tau, 512, scheme);
        CHECK(max_abs_diff(u, exact) < 1e-12);
    }
}

TEST_CASE("integrator convergence orders against a high-resolution reference", "[floquet]") {
    DriveParams drive;
    drive.omega0 = 0.9;
    const auto mode = ising_mode(kPi / 2, drive);
    const double tau = drive.tau();
    const Unitary2 reference = propagate_period(mode, tau, 1 << 15, Integrator::magnus4);

    const double mid_n = max_abs_diff(propagate_period(mode, tau, 128, Integrator::midpoint), reference);
    const double mid_2n = max_abs_diff(propagate_period(mode, tau, 256, Integrator::midpoint), reference);
    CHECK_THAT(mid_n / mid_2n, WithinAbs(4.0, 0.2));

    const double m4_n = max_abs_diff(propagate_period(mode, tau, 64, Integrator::magnus4), reference);
    const double m4_2n = max_abs_diff(propagate_period(mode, tau, 128, Integrator::magnus4), reference);
    CHECK_THAT(m4_n / m4_2n, WithinAbs(16.0, 1.0));
}

TEST_CASE("evolve applies the same sequence as propagate", "[floquet]") {
    DriveParams drive;
    drive.omega0 = 2.0;
    const auto mode = ising_mode(1.1, drive);
    const State2 psi{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
    const Unitary2 u = propagate(mode, 0.4, 3.0, 300, Integrator::magnus4);
    const State2 direct = evolve(mode, psi, 0.4, 3.0, 300, Integrator::magnus4);
    const State2 via_u = u * psi;
    CHECK(std::abs(direct.c0 - via_u.c0) < 1e-13);
    CHECK(std::abs(direct.c1 - via_u.c1) < 1e-13);
}

TEST_CASE("floquet_decompose examples", "[floquet]") {
    SECTION("identity is degenerate with zero quasi-energy") {
        const FloquetMode m = floquet_decompose(Unitary2::identity(), 1.0);
        CHECK(m.mu == 0.0);
        CHECK(m.degenerate);
    }
    SECTION("diagonal unitary") {
        const Unitary2 u{std::exp(Complex{0, -0.3}), Complex{}, Complex{}, std::exp(Complex{0, 0.3})};
        const FloquetMode m = floquet_decompose(u, 1.0);
        CHECK_THAT(m.mu, WithinAbs(0.3, 1e-15));
        CHECK_FALSE(m.degenerate);
        CHECK(std::abs(m.phi_plus.c0 - 1.0) < 1e-15);
        CHECK(std::abs(m.phi_plus.c1) < 1e-15);
        CHECK(std::abs(m.phi_minus.c0) < 1e-15);
        CHECK(std::abs(m.phi_minus.c1 - 1.0) < 1e-15);
    }
    SECTION("non-unitary input is rejected") {
        const Unitary2 bad{Complex{2, 0}, Complex{}, Complex{}, Complex{0.5, 0}};
        CHECK_THROWS_AS(floquet_decompose(bad, 1.0), PreconditionError);
    }
}

TEST_CASE("floquet_decompose reconstructs random SU(2) matrices", "[floquet][property]") {
    for (int trial = 0; trial < 500; ++trial) {
        const Unitary2 u = testing::random_su2();
        const double tau = testing::uniform(0.1, 10.0);
        const FloquetMode m = floquet_decompose(u, tau);
        REQUIRE_FALSE(m.degenerate);
        CHECK(m.mu >= 0.0);
        CHECK(m.mu <= kPi / tau + 1e-15);  // omega0 / 2
        CHECK(std::abs(inner(m.phi_plus, m.phi_minus)) <= 1e-10);
        CHECK(max_abs_diff(spectral_rebuild(m), u) <= 1e-12);
        // U phi+- = exp(-+ i mu tau) phi+-
        const State2 up = u * m.phi_plus;
        const Complex ph = std::exp(Complex{0, -m.mu * tau});
        CHECK(std::abs(up.c0 - ph * m.phi_plus.c0) + std::abs(up.c1 - ph * m.phi_plus.c1) <= 1e-9);
    }
}

TEST_CASE("interference phase is independent of the quasi-energy folding", "[floquet][property]") {
    // cos(2 mu n tau) is unchanged under mu -> -mu and mu -> mu + m omega0.
    for (int trial = 0; trial < 100; ++trial) {
        const double tau = testing::uniform(0.2, 5.0);
        const double omega0 = 2 * kPi / tau;
        const Unitary2 u = propagate_period(
            [](double t) { return CoefficientVector{std::cos(t), 0.5, std::sin(2 * t)}; }, tau, 64,
            Integrator::magnus4);
        const FloquetMode m = floquet_decompose(u, tau);
        // raw eigenphase of phi+ straight from the matrix, without folding
        const State2 up = u * m.phi_plus;
        const double raw = -std::arg(std::abs(m.phi_plus.c0) > 0.5 ? up.c0 / m.phi_plus.c0 : up.c1 / m.phi_plus.c1);
        for (int n : {1, 7, 40}) {
            const double folded = std::cos(2.0 * m.mu * n * tau);
            CHECK_THAT(std::cos(2.0 * (raw / tau) * n * tau), WithinAbs(folded, 1e-9));
            CHECK_THAT(std::cos(2.0 * (-m.mu + 3 * omega0) * n * tau), WithinAbs(folded, 1e-9));
        }
    }
}

TEST_CASE("overlaps examples", "[floquet]") {
    const Unitary2 u{std::exp(Complex{0, -0.7}), Complex{}, Complex{}, std::exp(Complex{0, 0.7})};
    const FloquetMode m = floquet_decompose(u, 1.0);
    SECTION("initial state equal to phi+") {
        const ModeOverlap ov = overlaps(m, m.phi_plus);
        CHECK_THAT(ov.a, WithinAbs(1.0, 1e-15));
        CHECK_THAT(ov.b, WithinAbs(0.0, 1e-15));
        CHECK_THAT(ov.q, WithinAbs(0.0, 1e-15));
    }
    SECTION("equal superposition maximizes q") {
        const double r = 1.0 / std::sqrt(2.0);
        const State2 psi{r * m.phi_plus.c0 + r * m.phi_minus.c0, r * m.phi_plus.c1 + r * m.phi_minus.c1};
        const ModeOverlap ov = overlaps(m, psi);
        CHECK_THAT(ov.a, WithinAbs(0.5, 1e-15));
        CHECK_THAT(ov.b, WithinAbs(0.5, 1e-15));
        CHECK_THAT(ov.q, WithinAbs(1.0, 1e-15));
    }
    SECTION("q from occupations") {
        CHECK_THAT(interference_factor(0.9, 0.1), WithinAbs(0.18 / 0.82, 1e-15));
    }
    SECTION("degenerate modes carry no interference") {
        const FloquetMode d = floquet_decompose(Unitary2::identity(), 1.0);
        const ModeOverlap ov = overlaps(d, State2{Complex{0.6, 0}, Complex{0.8, 0}});
        CHECK(ov.degenerate);
        CHECK(ov.a == 1.0);
        CHECK(ov.b == 0.0);
        CHECK(ov.q == 0.0);
    }
}

TEST_CASE("overlap sum rule and q range on random states", "[floquet][property]") {
    for (int trial = 0; trial < 300; ++trial) {
        const FloquetMode m = floquet_decompose(testing::random_su2(), 1.0);
        const State2 psi = ground_state(testing::random_coefficients());
        const ModeOverlap ov = overlaps(m, psi);
        CHECK_THAT(ov.a + ov.b, WithinAbs(1.0, 1e-10));
        CHECK(ov.q >= 0.0);
        CHECK(ov.q <= 1.0);
        CHECK(ov.q == 2 * ov.a * ov.b / (ov.a * ov.a + ov.b * ov.b));
    }
}

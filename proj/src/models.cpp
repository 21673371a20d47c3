#include "floquet_echo/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "floquet_echo/errors.hpp"

namespace floquet_echo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t steps_for(double tau, double omega_max) {
    const double per_period = std::ceil(64.0 * tau * omega_max / kTwoPi);
    return std::max<std::size_t>(512, static_cast<std::size_t>(per_period));
}

}  // namespace

double DriveParams::tau() const { return kTwoPi / omega0; }

double DriveParams::field(double t) const { return h + amplitude * std::cos(omega0 * t + phi0); }

void DriveParams::validate() const {
    if (!std::isfinite(h) || !std::isfinite(amplitude) || !std::isfinite(phi0) ||
        !std::isfinite(omega0)) {
        throw InputError("drive parameters must be finite");
    }
    if (!(omega0 > 0.0)) throw InputError("omega0 must be positive, got " + std::to_string(omega0));
}

double DiracParams::tau() const { return kTwoPi / omega0; }

void DiracParams::validate() const {
    if (!std::isfinite(m0) || !std::isfinite(omega0) || !std::isfinite(vF) || !std::isfinite(a)) {
        throw InputError("Dirac parameters must be finite");
    }
    if (!(omega0 > 0.0)) throw InputError("omega0 must be positive, got " + std::to_string(omega0));
    if (!(a > 0.0)) throw InputError("lattice length a must be positive");
}

CoefficientVector ising_mode_coeffs(double k, const DriveParams& drive, double t) {
    return {0.0, std::sin(k), -drive.field(t) + std::cos(k)};
}

CoefficientVector dirac_mode_coeffs(double kx, double ky, const DiracParams& p, double t) {
    return {p.vF * kx, p.vF * ky, p.m0 * std::cos(p.omega0 * t)};
}

MomentumGrid1D grid_1d(std::size_t L) {
    if (L < 4 || L % 4 != 0) {
        throw InputError("chain length L must be a positive multiple of 4, got " + std::to_string(L));
    }
    MomentumGrid1D grid;
    grid.L = L;
    grid.ks.reserve(L / 2);
    for (std::size_t p = 0; p < L / 2; ++p) {
        grid.ks.push_back(static_cast<double>(2 * p + 1) * std::numbers::pi / static_cast<double>(L));
    }
    return grid;
}

MomentumGrid2D grid_2d(std::size_t L, double a) {
    if (L < 2) throw InputError("2D grid size L must be >= 2, got " + std::to_string(L));
    if (!(a > 0.0) || !std::isfinite(a)) throw InputError("lattice length a must be positive");
    MomentumGrid2D grid;
    grid.L = L;
    grid.a = a;
    const double dk = std::numbers::pi / (static_cast<double>(L) * a);
    std::vector<double> axis(L);
    for (std::size_t n = 0; n < L; ++n) axis[n] = dk * (static_cast<double>(n) + 0.5);
    grid.pairs.reserve(L * L);
    for (double kx : axis) {
        for (double ky : axis) grid.pairs.emplace_back(kx, ky);
    }
    return grid;
}

double max_coefficient_norm(const DriveParams& drive) {
    return std::abs(drive.h) + std::abs(drive.amplitude) + 1.0;
}

double max_coefficient_norm(const DiracParams& p) {
    return std::abs(p.m0) + std::abs(p.vF) * std::numbers::pi * std::numbers::sqrt2 / p.a;
}

std::size_t default_steps(const DriveParams& drive) {
    return steps_for(drive.tau(), max_coefficient_norm(drive));
}

std::size_t default_steps(const DiracParams& p) { return steps_for(p.tau(), max_coefficient_norm(p)); }

}  // namespace floquet_echo

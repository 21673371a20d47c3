#pragma once

// Drive protocols, mode Hamiltonians and momentum grids.

#include <cstddef>
#include <utility>
#include <vector>

#include "floquet_echo/su2.hpp"

namespace floquet_echo {

/// Transverse field h(t) = h + A cos(omega0 t + phi0), coupling J = 1.
struct DriveParams {
    double h = 1.0;
    double amplitude = 1.0;
    double omega0 = 1.0;
    double phi0 = 0.0;

    [[nodiscard]] double tau() const;
    [[nodiscard]] double field(double t) const;
    /// Throws InputError unless omega0 > 0 and all fields are finite.
    void validate() const;
};

/// Massive Dirac cone with mass m(t) = m0 cos(omega0 t), hbar = 1.
struct DiracParams {
    double m0 = 1.0;
    double omega0 = 1.0;
    double vF = 1.0;
    double a = 1.0;  ///< lattice cutoff length; momenta live in (0, pi/a)

    [[nodiscard]] double tau() const;
    void validate() const;
};

/// Antiperiodic momenta k_p = (2p+1) pi / L, p = 0 .. L/2-1.
struct MomentumGrid1D {
    std::size_t L = 0;
    std::vector<double> ks;
};

/// Half-step offset quadrant grid k = (pi/(L a)) (n + 1/2), n = 0 .. L-1; pairs in row-major
/// order with kx outer.
struct MomentumGrid2D {
    std::size_t L = 0;
    double a = 1.0;
    std::vector<std::pair<double, double>> pairs;
};

/// H_k(t) = (-h(t) + cos k) sz + (sin k) sy.
CoefficientVector ising_mode_coeffs(double k, const DriveParams& drive, double t);

/// H_k(t) = vF kx sx + vF ky sy + m0 cos(omega0 t) sz.
CoefficientVector dirac_mode_coeffs(double kx, double ky, const DiracParams& p, double t);

/// Throws InputError unless L >= 4 and L % 4 == 0.
MomentumGrid1D grid_1d(std::size_t L);

/// Throws InputError unless L >= 2 and a > 0.
MomentumGrid2D grid_2d(std::size_t L, double a = 1.0);

/// Upper bounds on |a(t)| over all modes and times.
double max_coefficient_norm(const DriveParams& drive);
double max_coefficient_norm(const DiracParams& p);

/// max(512, ceil(64 tau Omega_max / 2pi)): at least 64 sub-steps per fastest phase oscillation.
std::size_t default_steps(const DriveParams& drive);
std::size_t default_steps(const DiracParams& p);

}  // namespace floquet_echo

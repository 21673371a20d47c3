#pragma once

// Structure of g_n versus the drive frequency: Bessel-zero peaks, 4/m resonance dips,
// per-momentum integrand profiles and the fast-driving limit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "floquet_echo/fidelity.hpp"
#include "floquet_echo/models.hpp"

namespace floquet_echo {

/// Zeroth-order Bessel function of the first kind. Power series (extended precision) for
/// |x| <= 17, Hankel asymptotic expansion beyond; absolute error below 1e-12 on [0, 20].
double bessel_j0(double x);

/// The s-th positive zero of J0 (s >= 1), by bracketing and bisection.
double bessel_j0_zero(std::size_t s);

/// Frequencies 2/j_{0,s} inside [omega_min, omega_max], descending. Throws InputError unless
/// 0 < omega_min < omega_max.
std::vector<double> bessel_peak_frequencies(double omega_min, double omega_max);

/// Frequencies 4/m (m >= 1) inside [omega_min, omega_max], descending.
std::vector<double> dip_frequencies(double omega_min, double omega_max);

/// As dip_frequencies but returning the orders m, ascending.
std::vector<std::size_t> dip_orders(double omega_min, double omega_max);

enum class GapKind { zero_gap, half_omega_gap };

struct ResonancePoint {
    double kx = 0.0;
    double ky = 0.0;
    GapKind kind = GapKind::zero_gap;
    double mu = 0.0;
    double gap = 0.0;  ///< min(mu, omega0/2 - mu)
};

/// Default detection threshold, 1e-2 omega0: on an L = 1000 chain grid the closest grid
/// approach to a quasi-degeneracy is typically 1e-3 .. 1e-2 omega0.
double default_resonance_threshold(double omega0);

/// Every mode whose quasi-energy lies within `threshold` of 0 or omega0/2, in record order.
std::vector<ResonancePoint> resonance_scan(const FloquetTable& table, double threshold);

struct IntegrandPoint {
    double kx = 0.0;
    double ky = 0.0;
    double mu = 0.0;
    double value = 0.0;
};

struct IntegrandProfile {
    double omega0 = 0.0;
    std::optional<std::uint64_t> n;  ///< empty: infinite-time integrand
    std::vector<IntegrandPoint> points;
    std::size_t clamp_events = 0;
};

/// Per-mode integrand of g_n (finite n) or of the closed-form g_inf (n empty); summing the
/// values with the table weight reproduces g_n / g_inf_closed.
IntegrandProfile integrand_profile(const FloquetTable& table, std::optional<std::uint64_t> n);

/// sin^2(t k J0(2/omega0)): small-k transition probability out of |k,-k>, meaningful for
/// |k| << omega0.
double kayanuma_probability(double t, double k, double omega0);

/// Static chain dispersion sqrt((h - cos k)^2 + sin^2 k).
double static_dispersion(double k, double h);

/// Folds an energy into the Floquet zone [0, omega0/2] as the eigenphase of exp(-i e tau) would.
double fold_quasi_energy(double energy, double omega0);

struct HighFrequencyReport {
    double omega0 = 0.0;
    std::vector<double> ks;
    std::vector<double> mu;
    std::vector<double> mu_average;  ///< dispersion of the period-averaged Hamiltonian, folded
    std::vector<double> q;
    std::vector<double> q_average;   ///< q from the t = 0 and period-averaged eigenbases
    double max_mu_deviation = 0.0;
    double max_q_deviation = 0.0;
};

/// q from the ground state of `initial` against the eigenbasis of `effective`:
/// (1 - c^2)/(1 + c^2) with c the cosine between the two coefficient vectors.
double two_basis_interference(const CoefficientVector& initial, const CoefficientVector& effective);

/// Compares the chain's Floquet data at omega0 with the period-averaged Hamiltonian (field h).
HighFrequencyReport highfreq_limit_check(const MomentumGrid1D& grid, const DriveParams& drive,
                                         const BuildOptions& options = {});

}  // namespace floquet_echo

#pragma once

// Stroboscopic dynamical fidelity per site, g_n = log F(n tau) / L, assembled from per-mode
// Floquet data, together with its decohered and infinite-time reference levels.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "floquet_echo/floquet.hpp"
#include "floquet_echo/models.hpp"

namespace floquet_echo {

enum class ModelKind { ising, dirac };

/// Floquet data of one momentum mode. For the chain only kx is used (ky = 0).
struct ModeFloquetRecord {
    double kx = 0.0;
    double ky = 0.0;
    double mu = 0.0;
    double theta = 0.0;  ///< mu * tau
    ModeOverlap overlap;
    bool degenerate = false;
    double unitarity_defect = 0.0;  ///< of the period propagator
    double det_defect = 0.0;
};

/// All mode records of one parameter set plus the quadrature weight that turns a sum over
/// modes into the per-site momentum integral: 1/L for the chain (dk/2pi with dk = 2pi/L),
/// (pi/a)^2 / (L^2 (2pi)^2) for the Dirac quadrant.
struct FloquetTable {
    ModelKind model = ModelKind::ising;
    std::size_t L = 0;
    double omega0 = 0.0;
    double tau = 0.0;
    double weight = 0.0;
    std::size_t steps = 0;
    Integrator scheme = Integrator::magnus4;
    std::vector<ModeFloquetRecord> records;

    [[nodiscard]] std::size_t expected_modes() const;
    /// Throws InputError if the record count does not match the grid implied by L.
    void check_size() const;
};

struct BuildOptions {
    std::size_t steps = 0;  ///< sub-steps per period; 0 selects default_steps()
    Integrator scheme = Integrator::magnus4;
    std::size_t workers = 1;
};

/// Propagates one mode over a period and records its Floquet data and overlaps with psi0.
ModeFloquetRecord analyze_mode(const CoefficientFn& coeffs, double tau, std::size_t steps,
                               Integrator scheme, const State2& psi0);

FloquetTable build_ising_table(const MomentumGrid1D& grid, const DriveParams& drive,
                               const BuildOptions& options = {});
FloquetTable build_dirac_table(const MomentumGrid2D& grid, const DiracParams& params,
                               const BuildOptions& options = {});

/// Floor applied to |z_n|^2 before taking the logarithm.
inline constexpr double kClampFloor = 1e-300;

/// 2 n theta reduced to [-pi, pi]. The product is carried in double-double so the reduction
/// stays accurate for n up to ~1e9.
double interference_phase(double theta, std::uint64_t n);

/// log(a^2 + b^2 + 2ab cos(2 n theta)). Degenerate modes give 0. Arguments below kClampFloor
/// are floored and counted in *clamp_events when provided.
double log_mode_term(const ModeOverlap& ov, double theta, std::uint64_t n,
                     std::size_t* clamp_events = nullptr);

struct FidelityValue {
    double value = 0.0;
    std::size_t clamp_events = 0;
};

/// Weighted sum of log_mode_term in record order with compensated accumulation.
FidelityValue g_n(const FloquetTable& table, std::uint64_t n);

/// Decohered level -w sum log(1 + q).
double g_dec(const FloquetTable& table);

/// Per-mode infinite-time term -log(2(1+q) / (1 + sqrt(1-q^2))); -log 4 at q = 1.
double infinite_time_mode_term(double q);

/// Closed-form n -> infinity limit.
double g_inf_closed(const FloquetTable& table);

/// c_p = (2p-1)!! / (2p (2p)!!), built from the ratio (2p-1)!!/(2p)!! so nothing overflows.
double series_coefficient(std::size_t p);

/// sum_{p=1}^{p_max} c_p q^(2p); tends to log(2/(1+sqrt(1-q^2))). Throws InputError if p_max = 0.
double phase_average_series(double q, std::size_t p_max);

/// g_dec minus the truncated even-power series. Throws InputError if p_max = 0.
double g_inf_series(const FloquetTable& table, std::size_t p_max);

/// g_dec + w sum q cos(2 n theta), which bounds g_n from above since log(1+x) <= x.
double interference_upper_bound(const FloquetTable& table, std::uint64_t n);

struct FidelityPoint {
    std::uint64_t n = 0;
    double g = 0.0;
};

struct FidelityCurve {
    ModelKind model = ModelKind::ising;
    std::size_t L = 0;
    double omega0 = 0.0;
    std::vector<FidelityPoint> entries;
    double g_dec = 0.0;
    double g_inf = 0.0;
    std::size_t clamp_events = 0;
};

FidelityCurve fidelity_curve(const FloquetTable& table, std::span<const std::uint64_t> ns);

enum class DirectMethod {
    repeated_period,  ///< build U(tau, 0) once and apply it n times
    continuous,       ///< step the state through all n * steps sub-intervals
};

struct DirectOptions {
    std::size_t steps = 0;  ///< 0 selects default_steps()
    Integrator scheme = Integrator::magnus4;
    DirectMethod method = DirectMethod::repeated_period;
    std::size_t workers = 1;
};

/// w sum_k log |<psi_k(0)|psi_k(n tau)>|^2 by explicit time evolution, without any Floquet
/// decomposition. Independent check of g_n.
FidelityValue direct_fidelity(const MomentumGrid1D& grid, const DriveParams& drive,
                              std::uint64_t n, const DirectOptions& options = {});
FidelityValue direct_fidelity(const MomentumGrid2D& grid, const DiracParams& params,
                              std::uint64_t n, const DirectOptions& options = {});

/// g_n of the Dirac model on the quadrant grid (builds the table internally).
FidelityValue g_n_dirac(const MomentumGrid2D& grid, const DiracParams& params, std::uint64_t n,
                        const BuildOptions& options = {});

}  // namespace floquet_echo

#include "floquet_echo/fidelity.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "floquet_echo/errors.hpp"
#include "floquet_echo/parallel.hpp"

namespace floquet_echo {

namespace {

constexpr double kPi = std::numbers::pi;
// 2 pi split into its double value and the rounding residual.
constexpr double kTwoPiHi = 6.283185307179586;
constexpr double kTwoPiLo = 2.4492935982947064e-16;

double quadrature_weight_1d(std::size_t L) { return 1.0 / static_cast<double>(L); }

double quadrature_weight_2d(std::size_t L, double a) {
    const double side = kPi / a;
    const double cells = static_cast<double>(L) * static_cast<double>(L);
    return side * side / (cells * 4.0 * kPi * kPi);
}

std::size_t resolve_steps(std::size_t requested, std::size_t fallback) {
    return requested == 0 ? fallback : requested;
}

double clamped_log(double x, std::size_t* clamp_events) {
    if (x < kClampFloor) {
        if (clamp_events != nullptr) ++*clamp_events;
        return std::log(kClampFloor);
    }
    return std::log(x);
}

/// One mode's return probability |<psi0|psi(n tau)>|^2 by explicit evolution.
double return_probability(const CoefficientFn& coeffs, double tau, std::uint64_t n,
                          const DirectOptions& options, std::size_t steps) {
    const State2 psi0 = ground_state(coeffs(0.0));
    State2 psi = psi0;
    if (options.method == DirectMethod::repeated_period) {
        const Unitary2 u = propagate_period(coeffs, tau, steps, options.scheme);
        for (std::uint64_t p = 0; p < n; ++p) psi = u * psi;
    } else {
        for (std::uint64_t p = 0; p < n; ++p) {
            psi = evolve(coeffs, psi, static_cast<double>(p) * tau, tau, steps, options.scheme);
        }
    }
    return std::norm(inner(psi0, psi));
}

}  // namespace

std::size_t FloquetTable::expected_modes() const { return model == ModelKind::ising ? L / 2 : L * L; }

void FloquetTable::check_size() const {
    if (records.size() != expected_modes()) {
        throw InputError("mode record count " + std::to_string(records.size()) +
                         " does not match grid size " + std::to_string(expected_modes()));
    }
}

ModeFloquetRecord analyze_mode(const CoefficientFn& coeffs, double tau, std::size_t steps,
                               Integrator scheme, const State2& psi0) {
    const Unitary2 u = propagate_period(coeffs, tau, steps, scheme);
    const FloquetMode mode = floquet_decompose(u, tau);
    ModeFloquetRecord rec;
    rec.mu = mode.mu;
    rec.theta = mode.theta;
    rec.overlap = overlaps(mode, psi0);
    rec.degenerate = mode.degenerate;
    rec.unitarity_defect = u.unitarity_defect();
    rec.det_defect = u.det_defect();
    return rec;
}

FloquetTable build_ising_table(const MomentumGrid1D& grid, const DriveParams& drive,
                               const BuildOptions& options) {
    drive.validate();
    FloquetTable table;
    table.model = ModelKind::ising;
    table.L = grid.L;
    table.omega0 = drive.omega0;
    table.tau = drive.tau();
    table.weight = quadrature_weight_1d(grid.L);
    table.steps = resolve_steps(options.steps, default_steps(drive));
    table.scheme = options.scheme;
    table.records.resize(grid.ks.size());
    parallel_for(grid.ks.size(), options.workers, [&](std::size_t i) {
        const double k = grid.ks[i];
        const CoefficientFn coeffs = [k, &drive](double t) { return ising_mode_coeffs(k, drive, t); };
        ModeFloquetRecord rec = analyze_mode(coeffs, table.tau, table.steps, table.scheme,
                                             ground_state(coeffs(0.0)));
        rec.kx = k;
        table.records[i] = rec;
    });
    table.check_size();
    return table;
}

FloquetTable build_dirac_table(const MomentumGrid2D& grid, const DiracParams& params,
                               const BuildOptions& options) {
    params.validate();
    FloquetTable table;
    table.model = ModelKind::dirac;
    table.L = grid.L;
    table.omega0 = params.omega0;
    table.tau = params.tau();
    table.weight = quadrature_weight_2d(grid.L, grid.a);
    table.steps = resolve_steps(options.steps, default_steps(params));
    table.scheme = options.scheme;
    table.records.resize(grid.pairs.size());
    parallel_for(grid.pairs.size(), options.workers, [&](std::size_t i) {
        const auto [kx, ky] = grid.pairs[i];
        const CoefficientFn coeffs = [kx, ky, &params](double t) {
            return dirac_mode_coeffs(kx, ky, params, t);
        };
        const CoefficientVector initial = coeffs(0.0);
        ModeFloquetRecord rec;
        if (initial.norm() == 0.0) {
            // Zero Hamiltonian at t = 0 (only possible when m0 = 0 at k = 0): nothing evolves.
            rec.degenerate = true;
            rec.overlap = {1.0, 0.0, 0.0, true};
        } else {
            rec = analyze_mode(coeffs, table.tau, table.steps, table.scheme, ground_state(initial));
        }
        rec.kx = kx;
        rec.ky = ky;
        table.records[i] = rec;
    });
    table.check_size();
    return table;
}

double interference_phase(double theta, std::uint64_t n) {
    const double m = 2.0 * static_cast<double>(n);  // exact for n < 2^52
    const double hi = m * theta;
    const double lo = std::fma(m, theta, -hi);
    const double turns = std::nearbyint(hi / kTwoPiHi);
    // hi - turns * kTwoPiHi is exact in one fma: both share the binade of the result.
    double r = std::fma(-turns, kTwoPiHi, hi);
    r += lo;
    r -= turns * kTwoPiLo;
    if (r > kPi) r -= kTwoPiHi;
    if (r < -kPi) r += kTwoPiHi;
    return r;
}

double log_mode_term(const ModeOverlap& ov, double theta, std::uint64_t n, std::size_t* clamp_events) {
    if (ov.degenerate) return 0.0;
    const double z2 = ov.a * ov.a + ov.b * ov.b +
                      2.0 * ov.a * ov.b * std::cos(interference_phase(theta, n));
    return clamped_log(z2, clamp_events);
}

FidelityValue g_n(const FloquetTable& table, std::uint64_t n) {
    table.check_size();
    FidelityValue out;
    if (n == 0) return out;
    CompensatedSum sum;
    for (const auto& rec : table.records) {
        sum.add(log_mode_term(rec.overlap, rec.theta, n, &out.clamp_events));
    }
    out.value = table.weight * sum.value();
    return out;
}

double g_dec(const FloquetTable& table) {
    table.check_size();
    CompensatedSum sum;
    for (const auto& rec : table.records) sum.add(std::log1p(rec.overlap.q));
    return -table.weight * sum.value();
}

double infinite_time_mode_term(double q) {
    if (q >= 1.0) return -std::log(4.0);
    return -std::log(2.0 * (1.0 + q) / (1.0 + std::sqrt((1.0 - q) * (1.0 + q))));
}

double g_inf_closed(const FloquetTable& table) {
    table.check_size();
    CompensatedSum sum;
    for (const auto& rec : table.records) sum.add(infinite_time_mode_term(rec.overlap.q));
    return table.weight * sum.value();
}

double series_coefficient(std::size_t p) {
    if (p == 0) throw InputError("series_coefficient: p must be >= 1");
    // ratio = (2p-1)!!/(2p)!!, ratio_1 = 1/2, ratio_{p+1} = ratio_p (2p+1)/(2p+2)
    double ratio = 0.5;
    for (std::size_t j = 1; j < p; ++j) {
        ratio *= static_cast<double>(2 * j + 1) / static_cast<double>(2 * j + 2);
    }
    return ratio / static_cast<double>(2 * p);
}

double phase_average_series(double q, std::size_t p_max) {
    if (p_max == 0) throw InputError("p_max must be >= 1");
    const double q2 = q * q;
    double ratio = 0.5;
    double power = q2;
    CompensatedSum sum;
    for (std::size_t p = 1; p <= p_max; ++p) {
        sum.add(ratio / static_cast<double>(2 * p) * power);
        ratio *= static_cast<double>(2 * p + 1) / static_cast<double>(2 * p + 2);
        power *= q2;
    }
    return sum.value();
}

double g_inf_series(const FloquetTable& table, std::size_t p_max) {
    if (p_max == 0) throw InputError("p_max must be >= 1");
    table.check_size();
    CompensatedSum sum;
    for (const auto& rec : table.records) sum.add(phase_average_series(rec.overlap.q, p_max));
    return g_dec(table) - table.weight * sum.value();
}

double interference_upper_bound(const FloquetTable& table, std::uint64_t n) {
    table.check_size();
    CompensatedSum sum;
    for (const auto& rec : table.records) {
        if (rec.overlap.degenerate) continue;
        sum.add(rec.overlap.q * std::cos(interference_phase(rec.theta, n)));
    }
    return g_dec(table) + table.weight * sum.value();
}

FidelityCurve fidelity_curve(const FloquetTable& table, std::span<const std::uint64_t> ns) {
    FidelityCurve curve;
    curve.model = table.model;
    curve.L = table.L;
    curve.omega0 = table.omega0;
    curve.g_dec = g_dec(table);
    curve.g_inf = g_inf_closed(table);
    curve.entries.reserve(ns.size());
    for (std::uint64_t n : ns) {
        const FidelityValue v = g_n(table, n);
        curve.entries.push_back({n, v.value});
        curve.clamp_events += v.clamp_events;
    }
    return curve;
}

FidelityValue direct_fidelity(const MomentumGrid1D& grid, const DriveParams& drive, std::uint64_t n,
                              const DirectOptions& options) {
    drive.validate();
    const std::size_t steps = resolve_steps(options.steps, default_steps(drive));
    const double tau = drive.tau();
    std::vector<double> probs(grid.ks.size(), 1.0);
    parallel_for(grid.ks.size(), options.workers, [&](std::size_t i) {
        const double k = grid.ks[i];
        const CoefficientFn coeffs = [k, &drive](double t) { return ising_mode_coeffs(k, drive, t); };
        probs[i] = return_probability(coeffs, tau, n, options, steps);
    });
    FidelityValue out;
    CompensatedSum sum;
    for (double p : probs) sum.add(clamped_log(p, &out.clamp_events));
    out.value = quadrature_weight_1d(grid.L) * sum.value();
    return out;
}

FidelityValue direct_fidelity(const MomentumGrid2D& grid, const DiracParams& params, std::uint64_t n,
                              const DirectOptions& options) {
    params.validate();
    const std::size_t steps = resolve_steps(options.steps, default_steps(params));
    const double tau = params.tau();
    std::vector<double> probs(grid.pairs.size(), 1.0);
    parallel_for(grid.pairs.size(), options.workers, [&](std::size_t i) {
        const auto [kx, ky] = grid.pairs[i];
        const CoefficientFn coeffs = [kx, ky, &params](double t) {
            return dirac_mode_coeffs(kx, ky, params, t);
        };
        if (coeffs(0.0).norm() == 0.0) return;
        probs[i] = return_probability(coeffs, tau, n, options, steps);
    });
    FidelityValue out;
    CompensatedSum sum;
    for (double p : probs) sum.add(clamped_log(p, &out.clamp_events));
    out.value = quadrature_weight_2d(grid.L, grid.a) * sum.value();
    return out;
}

FidelityValue g_n_dirac(const MomentumGrid2D& grid, const DiracParams& params, std::uint64_t n,
                        const BuildOptions& options) {
    return g_n(build_dirac_table(grid, params, options), n);
}

}  // namespace floquet_echo

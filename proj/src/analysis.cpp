#include "floquet_echo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "floquet_echo/errors.hpp"
#include "floquet_echo/parallel.hpp"

namespace floquet_echo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimit = 17.0;
constexpr std::size_t kMaxZeros = 1000000;

double j0_series(double x) {
    const long double y = -0.25L * static_cast<long double>(x) * static_cast<long double>(x);
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= y / (static_cast<long double>(k) * static_cast<long double>(k));
        sum += term;
        if (std::fabs(term) < 1e-24L && k > x) break;
    }
    return static_cast<double>(sum);
}

// Hankel expansion: J0 = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4)), truncated at the
// smallest term.
double j0_asymptotic(double x) {
    const long double inv8x = 1.0L / (8.0L * static_cast<long double>(x));
    long double p = 1.0L;
    long double q = 0.0L;
    long double coeff = 1.0L;  // a_m / x^m with a_m = prod (2j-1)^2 / (m! 8^m)
    long double previous = 2.0L;
    for (int m = 1; m < 200; ++m) {
        const long double odd = 2.0L * m - 1.0L;
        const long double next = coeff * odd * odd * inv8x / m;
        if (std::fabs(next) >= previous) break;
        previous = std::fabs(next);
        coeff = next;
        // m even feeds P, m odd feeds Q; signs alternate within each series.
        switch (m % 4) {
            case 1: q -= coeff; break;
            case 2: p -= coeff; break;
            case 3: q += coeff; break;
            default: p += coeff; break;
        }
        if (previous < 1e-24L) break;
    }
    const double phase = x - 0.25 * kPi;
    const long double amp = std::sqrt(2.0L / (static_cast<long double>(kPi) * x));
    return static_cast<double>(amp * (p * std::cos(phase) - q * std::sin(phase)));
}

void check_range(double omega_min, double omega_max) {
    if (!(omega_min > 0.0) || !(omega_min < omega_max) || !std::isfinite(omega_max)) {
        throw InputError("frequency range requires 0 < omega_min < omega_max");
    }
}

}  // namespace

double bessel_j0(double x) {
    x = std::abs(x);
    return x <= kSeriesLimit ? j0_series(x) : j0_asymptotic(x);
}

double bessel_j0_zero(std::size_t s) {
    if (s == 0) throw InputError("Bessel zero index starts at 1");
    // McMahon: j_{0,s} ~ (s - 1/4) pi, accurate to well inside +-0.5.
    const double guess = (static_cast<double>(s) - 0.25) * kPi;
    double lo = guess - 0.5;
    double hi = guess + 0.5;
    double f_lo = bessel_j0(lo);
    if (f_lo * bessel_j0(hi) > 0.0) throw std::logic_error("J0 zero not bracketed");
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = bessel_j0(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> bessel_peak_frequencies(double omega_min, double omega_max) {
    check_range(omega_min, omega_max);
    if (2.0 / omega_min > static_cast<double>(kMaxZeros) * kPi) {
        throw InputError("omega_min too small: would require more than 1e6 Bessel zeros");
    }
    std::vector<double> out;
    for (std::size_t s = 1;; ++s) {
        const double omega = 2.0 / bessel_j0_zero(s);
        if (omega < omega_min) break;
        if (omega <= omega_max) out.push_back(omega);
    }
    return out;
}

std::vector<std::size_t> dip_orders(double omega_min, double omega_max) {
    check_range(omega_min, omega_max);
    std::vector<std::size_t> out;
    const auto m_first = static_cast<std::size_t>(std::max(1.0, std::floor(4.0 / omega_max)));
    const auto m_last = static_cast<std::size_t>(std::ceil(4.0 / omega_min));
    for (std::size_t m = m_first; m <= m_last; ++m) {
        const double omega = 4.0 / static_cast<double>(m);
        if (omega >= omega_min && omega <= omega_max) out.push_back(m);
    }
    return out;
}

std::vector<double> dip_frequencies(double omega_min, double omega_max) {
    std::vector<double> out;
    for (std::size_t m : dip_orders(omega_min, omega_max)) out.push_back(4.0 / static_cast<double>(m));
    return out;
}

double default_resonance_threshold(double omega0) { return 1e-2 * omega0; }

std::vector<ResonancePoint> resonance_scan(const FloquetTable& table, double threshold) {
    table.check_size();
    std::vector<ResonancePoint> out;
    const double half = 0.5 * table.omega0;
    for (const auto& rec : table.records) {
        const double to_zero = rec.mu;
        const double to_half = half - rec.mu;
        const double gap = std::min(to_zero, to_half);
        if (gap < threshold) {
            out.push_back({rec.kx, rec.ky, to_zero <= to_half ? GapKind::zero_gap : GapKind::half_omega_gap,
                           rec.mu, std::max(gap, 0.0)});
        }
    }
    return out;
}

IntegrandProfile integrand_profile(const FloquetTable& table, std::optional<std::uint64_t> n) {
    table.check_size();
    IntegrandProfile profile;
    profile.omega0 = table.omega0;
    profile.n = n;
    profile.points.reserve(table.records.size());
    for (const auto& rec : table.records) {
        const double value = n ? log_mode_term(rec.overlap, rec.theta, *n, &profile.clamp_events)
                               : infinite_time_mode_term(rec.overlap.q);
        profile.points.push_back({rec.kx, rec.ky, rec.mu, value});
    }
    return profile;
}

double kayanuma_probability(double t, double k, double omega0) {
    const double s = std::sin(t * k * bessel_j0(2.0 / omega0));
    return s * s;
}

double static_dispersion(double k, double h) { return std::hypot(h - std::cos(k), std::sin(k)); }

double fold_quasi_energy(double energy, double omega0) {
    const double tau = 2.0 * kPi / omega0;
    const double phase = std::fmod(std::abs(energy) * tau, 2.0 * kPi);
    return std::min(phase, 2.0 * kPi - phase) / tau;
}

double two_basis_interference(const CoefficientVector& initial, const CoefficientVector& effective) {
    const double ni = initial.norm();
    const double ne = effective.norm();
    if (ni == 0.0 || ne == 0.0) return 0.0;
    const double c = (initial.x * effective.x + initial.y * effective.y + initial.z * effective.z) / (ni * ne);
    return (1.0 - c * c) / (1.0 + c * c);
}

HighFrequencyReport highfreq_limit_check(const MomentumGrid1D& grid, const DriveParams& drive,
                                         const BuildOptions& options) {
    const FloquetTable table = build_ising_table(grid, drive, options);
    HighFrequencyReport report;
    report.omega0 = drive.omega0;
    for (const auto& rec : table.records) {
        const double k = rec.kx;
        const CoefficientVector initial = ising_mode_coeffs(k, drive, 0.0);
        const CoefficientVector average{0.0, std::sin(k), -drive.h + std::cos(k)};
        report.ks.push_back(k);
        report.mu.push_back(rec.mu);
        report.mu_average.push_back(fold_quasi_energy(static_dispersion(k, drive.h), drive.omega0));
        report.q.push_back(rec.overlap.q);
        report.q_average.push_back(two_basis_interference(initial, average));
        report.max_mu_deviation =
            std::max(report.max_mu_deviation, std::abs(report.mu.back() - report.mu_average.back()));
        report.max_q_deviation =
            std::max(report.max_q_deviation, std::abs(report.q.back() - report.q_average.back()));
    }
    return report;
}

}  // namespace floquet_echo

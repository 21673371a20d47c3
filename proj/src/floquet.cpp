#include "floquet_echo/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floquet_echo/errors.hpp"

namespace floquet_echo {

namespace {

// Commutator-free fourth-order Magnus coefficients (Gauss-Legendre nodes 1/2 -+ sqrt(3)/6).
constexpr double kGaussOffset = std::numbers::sqrt3 / 6.0;
constexpr double kAlphaSmall = (3.0 - 2.0 * std::numbers::sqrt3) / 12.0;
constexpr double kAlphaLarge = (3.0 + 2.0 * std::numbers::sqrt3) / 12.0;

template <typename Target>
Target step_through(const CoefficientFn& coeffs, Target target, double t0, double span,
                    std::size_t steps, Integrator scheme) {
    if (steps == 0) throw InputError("propagate: steps must be >= 1");
    const double dt = span / static_cast<double>(steps);
    for (std::size_t j = 0; j < steps; ++j) {
        // t_j computed from j directly; accumulating t += dt drifts over long runs.
        const double tj = t0 + static_cast<double>(j) * dt;
        switch (scheme) {
            case Integrator::midpoint:
                target = su2_exp(coeffs(tj + 0.5 * dt), dt) * target;
                break;
            case Integrator::magnus4: {
                const CoefficientVector early = coeffs(tj + (0.5 - kGaussOffset) * dt);
                const CoefficientVector late = coeffs(tj + (0.5 + kGaussOffset) * dt);
                target = su2_exp(kAlphaLarge * early + kAlphaSmall * late, dt) * target;
                target = su2_exp(kAlphaSmall * early + kAlphaLarge * late, dt) * target;
                break;
            }
        }
    }
    return target;
}

}  // namespace

Unitary2 propagate(const CoefficientFn& coeffs, double t0, double span, std::size_t steps,
                   Integrator scheme) {
    return step_through(coeffs, Unitary2::identity(), t0, span, steps, scheme);
}

State2 evolve(const CoefficientFn& coeffs, State2 psi, double t0, double span, std::size_t steps,
              Integrator scheme) {
    return step_through(coeffs, psi, t0, span, steps, scheme);
}

Unitary2 propagate_period(const CoefficientFn& coeffs, double tau, std::size_t steps,
                          Integrator scheme) {
    return propagate(coeffs, 0.0, tau, steps, scheme);
}

FloquetMode floquet_decompose(const Unitary2& u, double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw InputError("floquet_decompose: tau must be positive");
    if (u.unitarity_defect() > 1e-8 || u.det_defect() > 1e-8) {
        throw PreconditionError("floquet_decompose: propagator is not in SU(2)");
    }
    // K = (U - U^dagger)/(2i), Hermitian; write K = v.sigma (+ negligible trace part).
    const Complex i{0.0, 1.0};
    const Complex k00 = (u(0, 0) - std::conj(u(0, 0))) / (2.0 * i);
    const Complex k11 = (u(1, 1) - std::conj(u(1, 1))) / (2.0 * i);
    const Complex k10 = (u(1, 0) - std::conj(u(0, 1))) / (2.0 * i);
    const CoefficientVector v{k10.real(), k10.imag(), 0.5 * (k00.real() - k11.real())};

    const double sin_theta = v.norm();
    const double cos_theta = std::clamp(0.5 * u.trace().real(), -1.0, 1.0);
    FloquetMode mode;
    // Same angle as arccos(cos_theta) but well conditioned near 0 and pi.
    mode.theta = std::atan2(sin_theta, cos_theta);
    mode.mu = mode.theta / tau;
    if (sin_theta < kDegeneracyThreshold) {
        mode.degenerate = true;
        return mode;
    }
    // K phi = -sin(theta) phi  <=>  U phi = exp(-i theta) phi.
    mode.phi_plus = ground_state(v);
    mode.phi_minus = ground_state(-v);
    return mode;
}

double interference_factor(double a, double b) {
    const double denom = a * a + b * b;
    return denom > 0.0 ? 2.0 * a * b / denom : 0.0;
}

ModeOverlap overlaps(const FloquetMode& mode, const State2& psi0) {
    if (mode.degenerate) return {1.0, 0.0, 0.0, true};
    ModeOverlap ov;
    ov.a = std::norm(inner(mode.phi_plus, psi0));
    ov.b = std::norm(inner(mode.phi_minus, psi0));
    ov.q = interference_factor(ov.a, ov.b);
    return ov;
}

}  // namespace floquet_echo

#pragma once

#include <cstddef>
#include <functional>

#include "floquet_echo/su2.hpp"

namespace floquet_echo {

/// Time-dependent mode Hamiltonian t -> a(t).
using CoefficientFn = std::function<CoefficientVector(double)>;

/// One-period product integrators. Both are products of closed-form SU(2) exponentials, hence
/// unitary with unit determinant to rounding.
enum class Integrator {
    midpoint,  ///< exp(-i a(t_j + dt/2) dt), second order
    magnus4,   ///< two-exponential commutator-free Magnus step at the Gauss nodes, fourth order
};

/// Propagator over [t0, t0 + span] with `steps` equal sub-steps, rightmost factor acting first.
/// Throws InputError if steps == 0.
Unitary2 propagate(const CoefficientFn& coeffs, double t0, double span, std::size_t steps,
                   Integrator scheme = Integrator::midpoint);

/// Applies the same sub-step sequence as propagate() directly to a state.
State2 evolve(const CoefficientFn& coeffs, State2 psi, double t0, double span, std::size_t steps,
              Integrator scheme = Integrator::midpoint);

/// Single-period propagator U(tau, 0). Throws InputError if steps == 0.
Unitary2 propagate_period(const CoefficientFn& coeffs, double tau, std::size_t steps,
                          Integrator scheme = Integrator::midpoint);

/// Below this |sin theta| the Floquet eigenvectors are numerically meaningless.
inline constexpr double kDegeneracyThreshold = 1e-9;

/// Floquet data of one mode at t = 0. U phi_plus = exp(-i theta) phi_plus with theta = mu tau.
struct FloquetMode {
    double mu = 0.0;     ///< quasi-energy in [0, omega0/2]
    double theta = 0.0;  ///< eigenphase per period, mu * tau, in [0, pi]
    State2 phi_plus;
    State2 phi_minus{Complex{}, Complex{1.0, 0.0}};
    bool degenerate = false;
};

/// Eigen-decomposition of a one-period propagator. Modes come from the Hermitian part
/// K = (U - U^dagger)/(2i) = -sin(theta) n.sigma. Throws PreconditionError if U is not unitary
/// with unit determinant (tolerance 1e-8) and InputError if tau <= 0.
FloquetMode floquet_decompose(const Unitary2& u, double tau);

/// Occupations of the two Floquet modes and the interference factor q = 2ab/(a^2+b^2).
struct ModeOverlap {
    double a = 1.0;  ///< |<phi+|psi0>|^2
    double b = 0.0;  ///< |<phi-|psi0>|^2
    double q = 0.0;
    bool degenerate = false;
};

/// q = 2ab/(a^2 + b^2); zero when both occupations vanish.
double interference_factor(double a, double b);

/// Overlaps of psi0 with the Floquet modes. Degenerate modes give (1, 0, 0) with the flag set:
/// psi0 is then itself a Floquet mode and the mode carries no interference.
ModeOverlap overlaps(const FloquetMode& mode, const State2& psi0);

}  // namespace floquet_echo

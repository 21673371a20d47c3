#include "floquet_echo/su2.hpp"

#include <algorithm>
#include <cmath>

#include "floquet_echo/errors.hpp"

namespace floquet_echo {

double CoefficientVector::norm() const { return std::hypot(x, y, z); }

bool CoefficientVector::finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
    const auto& p = a.m_;
    const auto& q = b.m_;
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
            p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

double Unitary2::unitarity_defect() const {
    const Unitary2 g = adjoint() * *this;
    double worst = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const Complex expected = r == c ? Complex{1.0, 0.0} : Complex{};
            worst = std::max(worst, std::abs(g(r, c) - expected));
        }
    }
    return worst;
}

double max_abs_diff(const Unitary2& a, const Unitary2& b) {
    double worst = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    }
    return worst;
}

Unitary2 su2_exp(const CoefficientVector& a, double dt) {
    if (!a.finite() || !std::isfinite(dt)) throw InputError("su2_exp: non-finite input");
    const double r = a.norm();
    if (r == 0.0) return Unitary2::identity();
    const double c = std::cos(r * dt);
    // sin(r dt)/r, so that the generator need not be normalized.
    const double s = std::sin(r * dt) / r;
    const Complex i{0.0, 1.0};
    return {Complex{c, -s * a.z}, -i * s * Complex{a.x, -a.y},
            -i * s * Complex{a.x, a.y}, Complex{c, s * a.z}};
}

State2 ground_state(const CoefficientVector& a) {
    if (!a.finite()) throw InputError("ground_state: non-finite coefficients");
    const double r = a.norm();
    if (r == 0.0) throw DegenerateInputError("ground_state: zero Hamiltonian has no unique ground state");

    // Two algebraically equivalent null vectors of (a.sigma + r); pick the one without cancellation.
    State2 v;
    if (a.z <= 0.0) {
        v = {Complex{r - a.z, 0.0}, -Complex{a.x, a.y}};
    } else {
        v = {Complex{a.x, -a.y}, Complex{-(a.z + r), 0.0}};
    }
    const double len = std::sqrt(v.norm_squared());
    Complex phase{1.0, 0.0};
    if (std::abs(v.c0) > 0.0) {
        phase = std::conj(v.c0) / std::abs(v.c0);
    } else {
        phase = std::conj(v.c1) / std::abs(v.c1);
    }
    v.c0 *= phase / len;
    v.c1 *= phase / len;
    if (std::abs(v.c0) > 0.0) v.c0 = Complex{v.c0.real(), 0.0};
    else v.c1 = Complex{v.c1.real(), 0.0};
    return v;
}

}  // namespace floquet_echo

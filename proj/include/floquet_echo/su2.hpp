#pragma once

// Two-level building blocks: traceless Hamiltonians a.sigma, 2x2 unitaries and spinors.

#include <array>
#include <complex>

namespace floquet_echo {

using Complex = std::complex<double>;

/// Real 3-vector (ax, ay, az) encoding the Hamiltonian ax*sx + ay*sy + az*sz.
struct CoefficientVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double norm() const;
    [[nodiscard]] bool finite() const;

    friend CoefficientVector operator+(const CoefficientVector& a, const CoefficientVector& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend CoefficientVector operator*(double s, const CoefficientVector& a) {
        return {s * a.x, s * a.y, s * a.z};
    }
    friend CoefficientVector operator-(const CoefficientVector& a) { return {-a.x, -a.y, -a.z}; }
    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// Normalized two-component amplitude in the (|0>, |k,-k>) basis.
struct State2 {
    Complex c0{1.0, 0.0};
    Complex c1{0.0, 0.0};

    [[nodiscard]] double norm_squared() const { return std::norm(c0) + std::norm(c1); }
};

/// <lhs|rhs>
inline Complex inner(const State2& lhs, const State2& rhs) {
    return std::conj(lhs.c0) * rhs.c0 + std::conj(lhs.c1) * rhs.c1;
}

/// Row-major 2x2 complex matrix; used for propagators, which are unitary with unit determinant.
class Unitary2 {
public:
    Unitary2() = default;
    Unitary2(Complex u00, Complex u01, Complex u10, Complex u11) : m_{u00, u01, u10, u11} {}

    static Unitary2 identity() { return {}; }

    [[nodiscard]] const Complex& operator()(int row, int col) const { return m_[2 * row + col]; }
    [[nodiscard]] Complex& operator()(int row, int col) { return m_[2 * row + col]; }

    [[nodiscard]] Complex trace() const { return m_[0] + m_[3]; }
    [[nodiscard]] Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    [[nodiscard]] Unitary2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
    }

    /// max |(U^dagger U - I)_ij|
    [[nodiscard]] double unitarity_defect() const;
    /// |det U - 1|
    [[nodiscard]] double det_defect() const { return std::abs(det() - 1.0); }

    friend Unitary2 operator*(const Unitary2& a, const Unitary2& b);
    friend State2 operator*(const Unitary2& u, const State2& s) {
        return {u.m_[0] * s.c0 + u.m_[1] * s.c1, u.m_[2] * s.c0 + u.m_[3] * s.c1};
    }

private:
    std::array<Complex, 4> m_{Complex{1.0, 0.0}, Complex{}, Complex{}, Complex{1.0, 0.0}};
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Unitary2& a, const Unitary2& b);

/// exp(-i (a.sigma) dt) in closed form: cos(|a|dt) I - i sin(|a|dt) (a/|a|).sigma.
/// Throws InputError on non-finite input.
Unitary2 su2_exp(const CoefficientVector& a, double dt);

/// Normalized eigenvector of a.sigma with eigenvalue -|a|, first nonzero component real positive.
/// Throws DegenerateInputError when |a| = 0.
State2 ground_state(const CoefficientVector& a);

}  // namespace floquet_echo

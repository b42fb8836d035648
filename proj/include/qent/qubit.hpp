// qubit.hpp: Bloch-vector representation of a single qubit and its entropy.
//
// Basis ordering follows the spin representation |1> = (1,0)^T, |0> = (0,1)^T,
// so row/column 0 of a QubitDensityMatrix is the excited state |1> and
// sigma_3 = diag(+1, -1). Coherences are v+ = <0|rho|1> = entry(1,0) and
// v- = conj(v+) = entry(0,1). Entropies are in nats.

#pragma once

#include <array>
#include <complex>

namespace qent {

using complex = std::complex<double>;

/// Tolerance band above |v| = 1 that is treated as roundoff and clamped.
inline constexpr double kBlochClampTolerance = 1e-9;

struct BlochVector {
    complex v_plus{0.0, 0.0};  // <0|rho|1>
    double v3{0.0};            // <1|rho|1> - <0|rho|0>

    complex v_minus() const noexcept { return std::conj(v_plus); }
    /// Cartesian components (v1, v2, v3) with v+ = (v1 + i v2) / 2.
    std::array<double, 3> cartesian() const noexcept {
        return {2.0 * v_plus.real(), 2.0 * v_plus.imag(), v3};
    }
};

class QubitDensityMatrix {
public:
    QubitDensityMatrix() = default;
    QubitDensityMatrix(complex e00, complex e01, complex e10, complex e11)
        : m_{e00, e01, e10, e11} {}

    complex operator()(int row, int col) const noexcept { return m_[2 * row + col]; }
    complex& operator()(int row, int col) noexcept { return m_[2 * row + col]; }

    complex trace() const noexcept { return m_[0] + m_[3]; }

    /// Both eigenvalues, ascending. Assumes Hermiticity.
    std::array<double, 2> eigenvalues() const noexcept;

    /// Throws std::domain_error unless Hermitian, unit-trace and PSD
    /// (all within `tol`).
    void validate(double tol = 1e-12) const;

private:
    std::array<complex, 4> m_{};
};

struct SchmidtWeights {
    double w0{1.0};
    double w1{0.0};
};

/// x ln x with the convention 0 ln 0 = 0.
double xlogx(double x) noexcept;

/// sqrt(4|v+|^2 + v3^2), clamped to 1 within kBlochClampTolerance.
double bloch_modulus(const BlochVector& b);

/// ln 2 - (1+v)/2 ln(1+v) - (1-v)/2 ln(1-v). Exactly 0 at v = 1.
double entropy_from_modulus(double v);

QubitDensityMatrix density_matrix_from_bloch(const BlochVector& b);
BlochVector bloch_from_density_matrix(const QubitDensityMatrix& rho);

/// -sum lambda ln lambda over the eigenvalues of rho.
double entropy_from_density_matrix(const QubitDensityMatrix& rho);

/// Eigenvalues ((1+v)/2, (1-v)/2) of the reduced state, i.e. the squared
/// Schmidt coefficients of any purification.
SchmidtWeights schmidt_weights_from_modulus(double v);

/// Entropy -sum w ln w of a pair of Schmidt weights.
double entropy_from_schmidt(const SchmidtWeights& w) noexcept;

/// u = artanh(v); only defined for mixed states (v < 1).
double rapidity_from_modulus(double v);

/// rho = 1/2 sqrt(1 - v^2) exp(sigma . u), with u parallel to the Bloch
/// vector and |u| = rapidity_from_modulus(|v|). Uses the closed 2x2
/// exponential cosh(u) + sinh(u) sigma . u_hat.
QubitDensityMatrix density_matrix_from_rapidity(const BlochVector& b);

}  // namespace qent

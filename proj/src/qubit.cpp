#include "qent/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qent {

namespace {

double checked_modulus(double v, const char* where) {
    if (!(v >= 0.0) || v > 1.0 + kBlochClampTolerance) {
        throw std::domain_error(std::string(where) + ": Bloch modulus " + std::to_string(v) +
                                " outside [0, 1]");
    }
    return std::min(v, 1.0);
}

}  // namespace

double xlogx(double x) noexcept { return x > 0.0 ? x * std::log(x) : 0.0; }

std::array<double, 2> QubitDensityMatrix::eigenvalues() const noexcept {
    const double a = m_[0].real();
    const double d = m_[3].real();
    const double half_trace = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m_[2]));
    return {half_trace - radius, half_trace + radius};
}

void QubitDensityMatrix::validate(double tol) const {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                throw std::domain_error("density matrix is not Hermitian");
            }
        }
    }
    if (std::abs(trace() - 1.0) > tol) {
        throw std::domain_error("density matrix trace differs from 1");
    }
    if (eigenvalues()[0] < -tol) {
        throw std::domain_error("density matrix has a negative eigenvalue");
    }
}

double bloch_modulus(const BlochVector& b) {
    const double v = std::sqrt(4.0 * std::norm(b.v_plus) + b.v3 * b.v3);
    return checked_modulus(v, "bloch_modulus");
}

double entropy_from_modulus(double v) {
    v = checked_modulus(v, "entropy_from_modulus");
    if (v == 1.0) return 0.0;
    const double s = std::numbers::ln2 - 0.5 * (1.0 + v) * std::log1p(v) -
                     0.5 * (1.0 - v) * std::log1p(-v);
    return std::clamp(s, 0.0, std::numbers::ln2);
}

QubitDensityMatrix density_matrix_from_bloch(const BlochVector& b) {
    bloch_modulus(b);
    return {complex{0.5 * (1.0 + b.v3), 0.0}, b.v_minus(), b.v_plus,
            complex{0.5 * (1.0 - b.v3), 0.0}};
}

BlochVector bloch_from_density_matrix(const QubitDensityMatrix& rho) {
    rho.validate();
    BlochVector b{rho(1, 0), rho(0, 0).real() - rho(1, 1).real()};
    bloch_modulus(b);
    return b;
}

double entropy_from_density_matrix(const QubitDensityMatrix& rho) {
    rho.validate();
    const auto lam = rho.eigenvalues();
    return -(xlogx(lam[0]) + xlogx(lam[1]));
}

SchmidtWeights schmidt_weights_from_modulus(double v) {
    v = checked_modulus(v, "schmidt_weights_from_modulus");
    return {0.5 * (1.0 + v), 0.5 * (1.0 - v)};
}

double entropy_from_schmidt(const SchmidtWeights& w) noexcept {
    return -(xlogx(w.w0) + xlogx(w.w1));
}

double rapidity_from_modulus(double v) {
    if (!(v >= 0.0) || v >= 1.0) {
        throw std::domain_error("rapidity_from_modulus: requires a mixed state, 0 <= v < 1");
    }
    return std::atanh(v);
}

QubitDensityMatrix density_matrix_from_rapidity(const BlochVector& b) {
    const double v = bloch_modulus(b);
    const double u = rapidity_from_modulus(v);
    const double prefactor = 0.5 * std::sqrt((1.0 - v) * (1.0 + v));
    const double c = std::cosh(u);
    const double sh = std::sinh(u);
    // sigma . u_hat in the (|1>, |0>) basis: [[n3, n1 - i n2], [n1 + i n2, -n3]].
    const auto [v1, v2, v3] = b.cartesian();
    const double n1 = v > 0.0 ? v1 / v : 0.0;
    const double n2 = v > 0.0 ? v2 / v : 0.0;
    const double n3 = v > 0.0 ? v3 / v : 0.0;
    return {complex{prefactor * (c + sh * n3), 0.0}, prefactor * sh * complex{n1, -n2},
            prefactor * sh * complex{n1, n2}, complex{prefactor * (c - sh * n3), 0.0}};
}

}  // namespace qent

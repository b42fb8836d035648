#include "qent/oracles/fock.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

namespace qent::oracles {

FockEvolutionResult fock_truncated_evolution(const DiscreteBath& bath, int n_max,
                                             const dephasing::DephasingInitialState& init,
                                             double omega0, double t) {
    bath.validate();
    init.validate();
    const std::size_t n_modes = bath.modes.size();
    if (n_modes < 1 || n_modes > kMaxFockModes) {
        throw std::invalid_argument("Fock oracle supports 1 to 3 bath modes");
    }
    if (n_max < 1 || n_max > kMaxFockLevel) {
        throw std::invalid_argument("Fock oracle supports n_max in [1, 10]");
    }

    const Eigen::Index levels = n_max + 1;
    Eigen::Index dim_b = 1;
    for (std::size_t k = 0; k < n_modes; ++k) dim_b *= levels;
    const Eigen::Index dim = 2 * dim_b;

    // Bath index b = sum_k n_k levels^k; full index = q * dim_b + b with
    // q = 0 for |1> (sigma_3 = +1) and q = 1 for |0>.
    auto occupation = [&](Eigen::Index b, std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) b /= levels;
        return static_cast<int>(b % levels);
    };
    Eigen::Index stride = 1;
    std::vector<Eigen::Index> strides(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        strides[k] = stride;
        stride *= levels;
    }

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int q = 0; q < 2; ++q) {
        const double sigma3 = q == 0 ? 1.0 : -1.0;
        const Eigen::Index offset = q * dim_b;
        for (Eigen::Index b = 0; b < dim_b; ++b) {
            double diag = 0.5 * omega0 * sigma3;
            for (std::size_t k = 0; k < n_modes; ++k) {
                const int n = occupation(b, k);
                diag += bath.modes[k].omega * n;
                if (n < n_max) {
                    // sigma_3 g (b^+ + b) between |n> and |n+1>.
                    const double elem = sigma3 * std::sqrt(bath.modes[k].g_sq) * std::sqrt(n + 1.0);
                    h(offset + b + strides[k], offset + b) = elem;
                    h(offset + b, offset + b + strides[k]) = elem;
                }
            }
            h(offset + b, offset + b) = diag;
        }
    }

    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(dim);
    psi0(0) = init.a1;       // |1> x |0_B>
    psi0(dim_b) = init.a0;   // |0> x |0_B>

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    if (eig.info() != Eigen::Success) throw std::runtime_error("Hamiltonian diagonalization failed");
    const Eigen::MatrixXd& vecs = eig.eigenvectors();
    Eigen::VectorXcd coeffs = vecs.transpose().cast<std::complex<double>>() * psi0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        coeffs(i) *= std::exp(std::complex<double>{0.0, -eig.eigenvalues()(i) * t});
    }
    const Eigen::VectorXcd psi = vecs.cast<std::complex<double>>() * coeffs;

    FockEvolutionResult out;
    for (std::size_t k = 0; k < n_modes; ++k) {
        double weight = 0.0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (occupation(i % dim_b, k) == n_max) weight += std::norm(psi(i));
        }
        out.top_level_weight = std::max(out.top_level_weight, weight);
    }
    if (out.top_level_weight > kTruncationLeakTolerance) {
        throw TruncationError("Fock truncation leak: top level holds " +
                                  std::to_string(out.top_level_weight),
                              out.top_level_weight);
    }

    // Rows: qubit (|1>, |0>); columns: bath basis.
    Eigen::MatrixXcd m(2, dim_b);
    m.row(0) = psi.segment(0, dim_b).transpose();
    m.row(1) = psi.segment(dim_b, dim_b).transpose();

    const Eigen::Matrix2cd rho_a = m * m.adjoint();
    out.rho_a = QubitDensityMatrix(rho_a(0, 0), rho_a(0, 1), rho_a(1, 0), rho_a(1, 1));

    const Eigen::MatrixXcd rho_b = m.transpose() * m.conjugate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig_b(rho_b, Eigen::EigenvaluesOnly);
    out.rho_b_spectrum.assign(eig_b.eigenvalues().data(),
                              eig_b.eigenvalues().data() + eig_b.eigenvalues().size());
    std::sort(out.rho_b_spectrum.begin(), out.rho_b_spectrum.end(), std::greater<>());
    return out;
}

}  // namespace qent::oracles

// bath.hpp: finite harmonic baths for the dephasing model and their exact
// coherent-state evolution.
//
// Couplings g_k are real and non-negative. The discretization follows the
// dephasing normalization sum_k 4 g_k^2 f(w_k) ~ int J(w) f(w) dw.

#pragma once

#include <cstddef>
#include <vector>

#include "qent/dephasing.hpp"
#include "qent/qubit.hpp"

namespace qent::oracles {

struct BathMode {
    double omega{1.0};
    double g_sq{0.0};
};

struct DiscreteBath {
    std::vector<BathMode> modes;

    /// Frequencies positive and strictly increasing, couplings non-negative.
    void validate() const;
};

/// Midpoint rule on [0, omega_max]: modes at cell centers, g_k^2 = J(w_k) dw / 4.
DiscreteBath discretize_bath(const dephasing::OhmicSpectralDensity& sd, std::size_t n_modes,
                             double omega_max);

/// sum_k 4 g_k^2 (1 - cos w_k t) / w_k^2, i.e. half the summed |alpha_k(t)|^2.
double discrete_gamma_vac(const DiscreteBath& bath, double t);

/// Reservoir states exp(-i H_B^(+/-) t)|0_B>, one per qubit branch, stored as
/// per-mode coherent amplitudes times a global phase:
///   |psi_B^(+/-)> = exp(i phase) prod_k |beta_k^(+/-)>.
struct CoherentBathState {
    std::vector<complex> beta_plus;
    std::vector<complex> beta_minus;
    double phase_plus{0.0};
    double phase_minus{0.0};

    /// <psi_B^(+)|psi_B^(-)>.
    complex overlap() const;
};

CoherentBathState evolve_coherent_branches(const DiscreteBath& bath, double t);

/// Reduced qubit state of the exact combined pure state at time t.
QubitDensityMatrix dephasing_exact_reduced_state(const DiscreteBath& bath,
                                                 const dephasing::DephasingInitialState& init,
                                                 double omega0, double t);

}  // namespace qent::oracles

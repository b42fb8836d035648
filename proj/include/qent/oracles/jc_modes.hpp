// jc_modes.hpp: single-excitation Jaynes-Cummings dynamics with a finite set
// of field modes sampled from the Lorentzian spectral density.
//
// Mode couplings follow the Jaynes-Cummings normalization
// sum_k |g_k|^2 f(w_k) ~ int J(w) f(w) dw, i.e. g_k^2 = J(w_k) dw with no
// factor 1/4 (compare DiscreteBath for the dephasing model).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qent/jaynes_cummings.hpp"

namespace qent::oracles {

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double residual)
        : std::runtime_error(what), norm_residual(residual) {}
    double norm_residual;
};

struct FieldModes {
    std::vector<double> omega;
    std::vector<double> g_sq;

    std::size_t size() const noexcept { return omega.size(); }
};

/// n_modes cell centers spanning [w0 - half_width lambda, w0 + half_width lambda].
FieldModes sample_lorentzian_modes(const jc::JCParams& p, std::size_t n_modes,
                                   double half_width = 50.0);

struct DiscreteModeResult {
    std::vector<double> times;
    std::vector<double> population;  // |c1(t)|^2
    double norm_residual{0.0};       // worst |<psi|psi> - 1| over all steps
};

inline constexpr double kNormResidualTolerance = 1e-8;

/// Integrates the interaction-picture amplitude equations for (c1, {c_k})
/// with classical fourth-order Runge-Kutta in a frame rotating with each
/// mode's detuning. Records every `record_every` steps. Throws
/// IntegrationError if the norm drifts by more than 1e-8.
DiscreteModeResult jc_discrete_mode_evolution(const jc::JCParams& p, const FieldModes& modes,
                                              const jc::JCInitialState& init, double t_end,
                                              double dt, std::size_t record_every = 1);

}  // namespace qent::oracles

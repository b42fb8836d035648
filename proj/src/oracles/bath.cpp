#include "qent/oracles/bath.hpp"

#include <cmath>
#include <stdexcept>

namespace qent::oracles {

void DiscreteBath::validate() const {
    for (std::size_t k = 0; k < modes.size(); ++k) {
        if (!(modes[k].omega > 0.0)) throw std::invalid_argument("bath frequencies must be > 0");
        if (!(modes[k].g_sq >= 0.0)) throw std::invalid_argument("bath couplings must be >= 0");
        if (k > 0 && !(modes[k].omega > modes[k - 1].omega)) {
            throw std::invalid_argument("bath frequencies must be strictly increasing");
        }
    }
}

DiscreteBath discretize_bath(const dephasing::OhmicSpectralDensity& sd, std::size_t n_modes,
                             double omega_max) {
    if (n_modes < 1) throw std::invalid_argument("need at least one mode");
    if (!(omega_max > 0.0)) throw std::invalid_argument("omega_max must be > 0");
    const double dw = omega_max / static_cast<double>(n_modes);
    DiscreteBath bath;
    bath.modes.reserve(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        const double w = (static_cast<double>(k) + 0.5) * dw;
        bath.modes.push_back({w, 0.25 * dephasing::spectral_density_eval(sd, w) * dw});
    }
    return bath;
}

double discrete_gamma_vac(const DiscreteBath& bath, double t) {
    if (!(t >= 0.0)) throw std::domain_error("discrete_gamma_vac needs t >= 0");
    double sum = 0.0;
    for (const auto& m : bath.modes) {
        const double s = std::sin(0.5 * m.omega * t);
        sum += 8.0 * m.g_sq * s * s / (m.omega * m.omega);
    }
    return sum;
}

complex CoherentBathState::overlap() const {
    // <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b) per mode.
    complex exponent{0.0, phase_minus - phase_plus};
    for (std::size_t k = 0; k < beta_plus.size(); ++k) {
        exponent += -0.5 * std::norm(beta_plus[k]) - 0.5 * std::norm(beta_minus[k]) +
                    std::conj(beta_plus[k]) * beta_minus[k];
    }
    return std::exp(exponent);
}

CoherentBathState evolve_coherent_branches(const DiscreteBath& bath, double t) {
    bath.validate();
    // Under w b^+b + f (b + b^+), the vacuum evolves into
    // exp(i (f/w)^2 (wt - sin wt)) |(f/w)(exp(-iwt) - 1)>.
    CoherentBathState state;
    state.beta_plus.reserve(bath.modes.size());
    state.beta_minus.reserve(bath.modes.size());
    for (const auto& m : bath.modes) {
        const double ratio = std::sqrt(m.g_sq) / m.omega;
        const complex shift = std::exp(complex{0.0, -m.omega * t}) - 1.0;
        const double phase = ratio * ratio * (m.omega * t - std::sin(m.omega * t));
        state.beta_plus.push_back(ratio * shift);
        state.beta_minus.push_back(-ratio * shift);
        state.phase_plus += phase;
        state.phase_minus += phase;
    }
    return state;
}

QubitDensityMatrix dephasing_exact_reduced_state(const DiscreteBath& bath,
                                                 const dephasing::DephasingInitialState& init,
                                                 double omega0, double t) {
    init.validate();
    const auto branches = evolve_coherent_branches(bath, t);
    // |psi_AB> = a0 e^{+i w0 t/2} |psi_B^->|0> + a1 e^{-i w0 t/2} |psi_B^+>|1>.
    const complex amp0 = init.a0 * std::exp(complex{0.0, 0.5 * omega0 * t});
    const complex amp1 = init.a1 * std::exp(complex{0.0, -0.5 * omega0 * t});
    // <0|rho_A|1> = amp0 conj(amp1) <psi_B^+|psi_B^->.
    const complex coherence = amp0 * std::conj(amp1) * branches.overlap();
    return {complex{std::norm(amp1), 0.0}, std::conj(coherence), coherence,
            complex{std::norm(amp0), 0.0}};
}

}  // namespace qent::oracles

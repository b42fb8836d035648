// dephasing.hpp: pure-dephasing spin-boson model at zero temperature.
//
// H = w0/2 sigma_3 + sum_k w_k b_k^+ b_k + sigma_3 sum_k (g_k b_k^+ + g_k^* b_k)
// with the reservoir initially in its vacuum. Populations are conserved and
// the coherences decay as v+(t) = v+(0) exp(i w0 t - gamma_vac(t)), where
//
//   gamma_vac(t) = int_0^inf J(w) (1 - cos wt) / w^2 dw,
//   sum_k 4 |g_k|^2 f(w_k) = int_0^inf J(w) f(w) dw.
//
// The initial qubit state a0|0> + a1|1> fixes v+(0) = <0|rho|1> = a0 conj(a1)
// and v3 = |a1|^2 - |a0|^2.

#pragma once

#include <span>

#include "qent/qubit.hpp"
#include "qent/trajectory.hpp"

namespace qent::dephasing {

/// J(w) = coupling * cutoff^(1-s) * w^s * exp(-w / cutoff).
struct OhmicSpectralDensity {
    double s{1.0};
    double coupling{0.0};
    double cutoff{1.0};

    /// Throws std::invalid_argument unless s > 0, coupling >= 0, cutoff > 0.
    void validate() const;
    bool complete_decoherence() const noexcept { return s <= 1.0; }
};

struct DephasingInitialState {
    complex a0{1.0, 0.0};
    complex a1{0.0, 0.0};

    void validate() const;
    double v3() const noexcept { return std::norm(a1) - std::norm(a0); }
    complex v_plus() const noexcept { return a0 * std::conj(a1); }

    /// Real amplitudes with |a0|^2 = (1 - v3) / 2.
    static DephasingInitialState from_v3(double v3);
};

double spectral_density_eval(const OhmicSpectralDensity& sd, double omega);

/// Closed-form vacuum decoherence function for the Ohmic family.
double gamma_vac_closed(const OhmicSpectralDensity& sd, double t);

/// coupling * Gamma(s - 1); only exists for s > 1.
double gamma_vac_infinity(const OhmicSpectralDensity& sd);

/// sqrt(v3^2 + (1 - v3^2) exp(-2 gamma)) for an initially pure state.
double bloch_modulus_dephasing(double v3, double gamma);

/// t -> infinity entropy for a pure initial state with population difference v3.
double entropy_limit_dephasing(const OhmicSpectralDensity& sd, double v3);

Trajectory dephasing_trajectory(const OhmicSpectralDensity& sd, const DephasingInitialState& init,
                                double omega0, std::span<const double> times);

}  // namespace qent::dephasing

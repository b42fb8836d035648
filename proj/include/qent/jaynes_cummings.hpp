// jaynes_cummings.hpp: spontaneous decay of a qubit into a Lorentzian field
// reservoir (damped Jaynes-Cummings model), exact in the single-excitation
// sector.
//
// In the interaction picture the state is [a0|0> + c1(t)|1>]|0_B> plus
// one-photon components, and c1 obeys
//
//   dc1/dt = -int_0^t f(t - t') c1(t') dt',  f(t) = int J(w) exp(i(w0 - w)t) dw,
//
// with J(w) = gamma0 lambda^2 / (2 pi ((w0 - w)^2 + lambda^2)). Note that this
// J is normalized by sum_k |g_k|^2 f(w_k) = int J f, without the factor 4 used
// by the dephasing model.

#pragma once

#include <optional>
#include <span>

#include "qent/qubit.hpp"
#include "qent/trajectory.hpp"

namespace qent::jc {

struct JCParams {
    double gamma0{0.5};  // Markovian decay rate
    double lambda{1.0};  // spectral width
    double omega0{0.0};  // atomic transition frequency

    void validate() const;
    /// Dimensionless coupling K = 2 gamma0 / lambda.
    double K() const noexcept { return 2.0 * gamma0 / lambda; }
    /// Sign selects the envelope regime: > 0 overdamped, 0 critical, < 0 oscillatory.
    double discriminant() const noexcept { return 1.0 - K(); }

    static JCParams from_K(double K, double lambda = 1.0, double omega0 = 0.0);
};

struct JCInitialState {
    complex a0{0.0, 0.0};
    complex c1_0{1.0, 0.0};

    void validate() const;
    double population() const noexcept { return std::norm(c1_0); }

    static JCInitialState from_population(double c1_0_sq);
};

double lorentzian_density(const JCParams& p, double omega);

/// f(t) = (gamma0 lambda / 2) exp(-lambda |t|), the full-line Fourier
/// transform of the Lorentzian at resonance.
complex memory_kernel(const JCParams& p, double t);

/// F_K(t): squared bracket multiplying exp(-lambda t) in the population.
double envelope_F(const JCParams& p, double t);

/// c1(t) / c1(0) = exp(-lambda t / 2) [cosh(L t/2) + (lambda/L) sinh(L t/2)],
/// L^2 = lambda^2 (1 - K). Real, evaluated without overflow for large t.
double amplitude_ratio(const JCParams& p, double t);

/// |c1(t)|^2 = |c1(0)|^2 exp(-lambda t) F_K(t).
double population_c1_sq(const JCParams& p, double c1_0_sq, double t);

/// sqrt(1 - 4 |c1(t)|^2 (|c1(0)|^2 - |c1(t)|^2)).
double bloch_modulus_jc(double c1_0_sq, double c1_t_sq);

/// First time the population drops to 1/2 (where v = 0 and S = ln 2).
/// Only exists for a fully excited initial state; returns nullopt otherwise.
std::optional<double> max_entropy_time(const JCParams& p, double c1_0_sq);

Trajectory jc_trajectory(const JCParams& p, const JCInitialState& init,
                         std::span<const double> times);

}  // namespace qent::jc

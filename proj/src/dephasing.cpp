#include "qent/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qent::dephasing {

void OhmicSpectralDensity::validate() const {
    if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("Ohmicity s must be > 0");
    if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
        throw std::invalid_argument("coupling must be >= 0");
    }
    if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw std::invalid_argument("cutoff must be > 0");
}

void DephasingInitialState::validate() const {
    if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > 1e-12) {
        throw std::invalid_argument("initial amplitudes are not normalized");
    }
}

DephasingInitialState DephasingInitialState::from_v3(double v3) {
    if (!(std::abs(v3) <= 1.0)) throw std::invalid_argument("|v3| must be <= 1");
    return {complex{std::sqrt(0.5 * (1.0 - v3)), 0.0}, complex{std::sqrt(0.5 * (1.0 + v3)), 0.0}};
}

double spectral_density_eval(const OhmicSpectralDensity& sd, double omega) {
    sd.validate();
    if (!(omega >= 0.0)) throw std::domain_error("spectral density needs omega >= 0");
    if (omega == 0.0) return 0.0;
    return sd.coupling * std::pow(sd.cutoff, 1.0 - sd.s) * std::pow(omega, sd.s) *
           std::exp(-omega / sd.cutoff);
}

double gamma_vac_closed(const OhmicSpectralDensity& sd, double t) {
    sd.validate();
    if (!(t >= 0.0)) throw std::domain_error("gamma_vac needs t >= 0");
    const double x = sd.cutoff * t;
    const double log_radius = 0.5 * std::log1p(x * x);  // ln sqrt(1 + x^2)
    if (sd.s == 1.0) return sd.coupling * log_radius;

    const double eps = sd.s - 1.0;
    const double theta = std::atan(x);
    if (std::abs(eps) < 1e-8) {
        // Gamma(eps) * bracket expanded to first order in eps around the Ohmic point.
        constexpr double euler_gamma = std::numbers::egamma;
        return sd.coupling *
               (log_radius +
                eps * (0.5 * (theta * theta - log_radius * log_radius) - euler_gamma * log_radius));
    }
    // 1 - cos(eps theta) (1+x^2)^(-eps/2), split so that neither piece cancels.
    const double half_angle = std::sin(0.5 * eps * theta);
    const double bracket = -std::expm1(-eps * log_radius) +
                           std::exp(-eps * log_radius) * 2.0 * half_angle * half_angle;
    return sd.coupling * std::tgamma(eps) * bracket;
}

double gamma_vac_infinity(const OhmicSpectralDensity& sd) {
    sd.validate();
    if (sd.complete_decoherence()) {
        throw std::domain_error("gamma_vac diverges for s <= 1 (complete decoherence)");
    }
    return sd.coupling * std::tgamma(sd.s - 1.0);
}

double bloch_modulus_dephasing(double v3, double gamma) {
    if (!(std::abs(v3) <= 1.0)) throw std::domain_error("|v3| must be <= 1");
    if (!(gamma >= 0.0)) throw std::domain_error("decoherence function must be >= 0");
    const double v3sq = v3 * v3;
    return std::min(1.0, std::sqrt(v3sq + (1.0 - v3sq) * std::exp(-2.0 * gamma)));
}

double entropy_limit_dephasing(const OhmicSpectralDensity& sd, double v3) {
    sd.validate();
    if (!(std::abs(v3) <= 1.0)) throw std::domain_error("|v3| must be <= 1");
    if (sd.complete_decoherence()) return entropy_from_modulus(std::abs(v3));
    return entropy_from_modulus(bloch_modulus_dephasing(v3, gamma_vac_infinity(sd)));
}

Trajectory dephasing_trajectory(const OhmicSpectralDensity& sd, const DephasingInitialState& init,
                                double omega0, std::span<const double> times) {
    sd.validate();
    init.validate();
    validate_time_grid(times);
    const double v3 = init.v3();
    const complex vp0 = init.v_plus();

    Trajectory traj;
    traj.records.reserve(times.size());
    for (double t : times) {
        TrajectoryRecord r;
        r.t = t;
        r.primary = gamma_vac_closed(sd, t);
        r.v = bloch_modulus_dephasing(v3, r.primary);
        r.entropy = entropy_from_modulus(r.v);
        r.bloch = {vp0 * std::exp(complex{-r.primary, omega0 * t}), v3};
        traj.records.push_back(r);
    }
    return traj;
}

}  // namespace qent::dephasing

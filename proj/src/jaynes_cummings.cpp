#include "qent/jaynes_cummings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qent::jc {

namespace {

double sinhc(double x) noexcept {
    if (std::abs(x) < 1e-4) return 1.0 + x * x / 6.0;
    return std::sinh(x) / x;
}

double sinc(double x) noexcept {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// cosh(L t/2) + (lambda t/2) sinhc(L t/2), continued to imaginary L.
double envelope_root(const JCParams& p, double t) {
    const double half = 0.5 * p.lambda * t;
    const double d = p.discriminant();
    if (d >= 0.0) {
        const double x = std::sqrt(d) * half;
        return std::cosh(x) + half * sinhc(x);
    }
    const double y = std::sqrt(-d) * half;
    return std::cos(y) + half * sinc(y);
}

void check_population(double c, const char* what) {
    if (!(c >= 0.0) || c > 1.0) throw std::domain_error(std::string(what) + " outside [0, 1]");
}

}  // namespace

void JCParams::validate() const {
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw std::invalid_argument("gamma0 must be > 0");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be > 0");
    if (!std::isfinite(omega0)) throw std::invalid_argument("omega0 must be finite");
}

JCParams JCParams::from_K(double K, double lambda, double omega0) {
    JCParams p{0.5 * K * lambda, lambda, omega0};
    p.validate();
    return p;
}

void JCInitialState::validate() const {
    if (std::abs(std::norm(a0) + std::norm(c1_0) - 1.0) > 1e-12) {
        throw std::invalid_argument("initial amplitudes are not normalized");
    }
}

JCInitialState JCInitialState::from_population(double c1_0_sq) {
    check_population(c1_0_sq, "initial population");
    return {complex{std::sqrt(1.0 - c1_0_sq), 0.0}, complex{std::sqrt(c1_0_sq), 0.0}};
}

double lorentzian_density(const JCParams& p, double omega) {
    const double detuning = p.omega0 - omega;
    return p.gamma0 * p.lambda * p.lambda /
           (2.0 * std::numbers::pi * (detuning * detuning + p.lambda * p.lambda));
}

complex memory_kernel(const JCParams& p, double t) {
    return {0.5 * p.gamma0 * p.lambda * std::exp(-p.lambda * std::abs(t)), 0.0};
}

double envelope_F(const JCParams& p, double t) {
    p.validate();
    if (!(t >= 0.0)) throw std::domain_error("envelope_F needs t >= 0");
    const double r = envelope_root(p, t);
    return r * r;
}

double amplitude_ratio(const JCParams& p, double t) {
    p.validate();
    if (!(t >= 0.0)) throw std::domain_error("amplitude_ratio needs t >= 0");
    const double half = 0.5 * p.lambda * t;
    const double d = p.discriminant();
    if (d > 0.0) {
        const double x = std::sqrt(d) * half;
        if (x > 1.0) {
            // Fold exp(-lambda t/2) into the hyperbolic terms; x <= half keeps both exponents <= 0.
            return 0.5 * std::exp(x - half) * (1.0 + half / x) +
                   0.5 * std::exp(-x - half) * (1.0 - half / x);
        }
    }
    return std::exp(-half) * envelope_root(p, t);
}

double population_c1_sq(const JCParams& p, double c1_0_sq, double t) {
    check_population(c1_0_sq, "initial population");
    const double r = amplitude_ratio(p, t);
    return std::clamp(c1_0_sq * r * r, 0.0, c1_0_sq);
}

double bloch_modulus_jc(double c1_0_sq, double c1_t_sq) {
    check_population(c1_0_sq, "initial population");
    check_population(c1_t_sq, "population");
    if (c1_t_sq > c1_0_sq + 1e-12) {
        throw std::domain_error("population exceeds its initial value");
    }
    const double radicand = 1.0 - 4.0 * c1_t_sq * (c1_0_sq - c1_t_sq);
    if (radicand < -1e-12) throw std::domain_error("negative Bloch modulus radicand");
    return std::min(1.0, std::sqrt(std::max(radicand, 0.0)));
}

std::optional<double> max_entropy_time(const JCParams& p, double c1_0_sq) {
    p.validate();
    check_population(c1_0_sq, "initial population");
    if (std::abs(c1_0_sq - 1.0) > 1e-12) return std::nullopt;

    auto excess = [&](double t) { return population_c1_sq(p, 1.0, t) - 0.5; };
    const double step = 0.01 / p.lambda;
    double lo = 0.0;
    double hi = step;
    // The population tends to 0 for every K > 0, so a first crossing exists.
    while (excess(hi) > 0.0) {
        lo = hi;
        hi += step;
        if (hi > 1e6 / p.lambda) throw std::runtime_error("max_entropy_time: no crossing found");
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::abs(excess(lo)) < std::abs(excess(hi)) ? lo : hi;
}

Trajectory jc_trajectory(const JCParams& p, const JCInitialState& init,
                         std::span<const double> times) {
    p.validate();
    init.validate();
    validate_time_grid(times);
    const double c0 = init.population();

    Trajectory traj;
    traj.records.reserve(times.size());
    for (double t : times) {
        const complex c1 = init.c1_0 * amplitude_ratio(p, t);
        TrajectoryRecord r;
        r.t = t;
        r.primary = std::min(std::norm(c1), c0);
        r.v = bloch_modulus_jc(c0, r.primary);
        r.entropy = entropy_from_modulus(r.v);
        r.bloch = {std::exp(complex{0.0, p.omega0 * t}) * init.a0 * std::conj(c1),
                   2.0 * r.primary - 1.0};
        traj.records.push_back(r);
    }
    return traj;
}

}  // namespace qent::jc

#include "qent/oracles/jc_modes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qent::oracles {

FieldModes sample_lorentzian_modes(const jc::JCParams& p, std::size_t n_modes, double half_width) {
    p.validate();
    if (n_modes < 1) throw std::invalid_argument("need at least one mode");
    if (!(half_width > 0.0)) throw std::invalid_argument("half_width must be > 0");
    const double lo = p.omega0 - half_width * p.lambda;
    const double dw = 2.0 * half_width * p.lambda / static_cast<double>(n_modes);
    FieldModes modes;
    modes.omega.reserve(n_modes);
    modes.g_sq.reserve(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        const double w = lo + (static_cast<double>(k) + 0.5) * dw;
        modes.omega.push_back(w);
        modes.g_sq.push_back(jc::lorentzian_density(p, w) * dw);
    }
    return modes;
}

DiscreteModeResult jc_discrete_mode_evolution(const jc::JCParams& p, const FieldModes& modes,
                                              const jc::JCInitialState& init, double t_end,
                                              double dt, std::size_t record_every) {
    p.validate();
    init.validate();
    if (!(dt > 0.0) || !(t_end > 0.0)) throw std::invalid_argument("need dt > 0 and t_end > 0");
    if (record_every < 1) throw std::invalid_argument("record_every must be >= 1");
    if (modes.omega.size() != modes.g_sq.size()) throw std::invalid_argument("mode arrays differ");

    const std::size_t n = modes.size();
    std::vector<double> g(n), detuning(n);
    for (std::size_t k = 0; k < n; ++k) {
        g[k] = std::sqrt(modes.g_sq[k]);
        detuning[k] = p.omega0 - modes.omega[k];
    }

    // State y = (c1, d_1..d_n) with d_k = c_k exp(i detuning_k t), so that
    //   i dc1/dt = sum_k g_k d_k,   i dd_k/dt = g_k c1 - detuning_k d_k.
    using State = std::vector<complex>;
    const complex minus_i{0.0, -1.0};
    auto rhs = [&](const State& y, State& out) {
        complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            acc += g[k] * y[k + 1];
            out[k + 1] = minus_i * (g[k] * y[0] - detuning[k] * y[k + 1]);
        }
        out[0] = minus_i * acc;
    };

    State y(n + 1, complex{0.0, 0.0});
    y[0] = init.c1_0;
    State k1(n + 1), k2(n + 1), k3(n + 1), k4(n + 1), tmp(n + 1);
    const double a0_sq = std::norm(init.a0);
    auto norm_residual = [&] {
        double sum = a0_sq;
        for (const auto& c : y) sum += std::norm(c);
        return std::abs(sum - 1.0);
    };

    const auto n_steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    DiscreteModeResult result;
    result.times.push_back(0.0);
    result.population.push_back(std::norm(y[0]));
    for (std::size_t step = 1; step <= n_steps; ++step) {
        rhs(y, k1);
        for (std::size_t i = 0; i <= n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        rhs(tmp, k2);
        for (std::size_t i = 0; i <= n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        rhs(tmp, k3);
        for (std::size_t i = 0; i <= n; ++i) tmp[i] = y[i] + dt * k3[i];
        rhs(tmp, k4);
        for (std::size_t i = 0; i <= n; ++i) {
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        result.norm_residual = std::max(result.norm_residual, norm_residual());
        if (result.norm_residual > kNormResidualTolerance) {
            throw IntegrationError("norm drifted by " + std::to_string(result.norm_residual),
                                   result.norm_residual);
        }
        if (step % record_every == 0 || step == n_steps) {
            result.times.push_back(static_cast<double>(step) * dt);
            result.population.push_back(std::norm(y[0]));
        }
    }
    return result;
}

}  // namespace qent::oracles

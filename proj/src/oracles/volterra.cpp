#include "qent/oracles/volterra.hpp"

#include <cmath>

namespace qent::oracles {

namespace {

// int_0^1 exp(-x s) ds and int_0^1 s exp(-x s) ds.
double kernel_mean(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0;
    return -std::expm1(-x) / x;
}

double kernel_first_moment(double x) {
    if (std::abs(x) < 1e-3) return 0.5 - x / 3.0 + x * x / 8.0 - x * x * x / 30.0;
    return (1.0 - std::exp(-x) * (1.0 + x)) / (x * x);
}

}  // namespace

double ExponentialKernel::operator()(double t) const noexcept {
    return amplitude * std::exp(-rate * std::abs(t));
}

ExponentialKernel ExponentialKernel::from_params(const jc::JCParams& p) {
    p.validate();
    // Matches jc::memory_kernel: f(t) = (gamma0 lambda / 2) exp(-lambda |t|).
    return {0.5 * p.gamma0 * p.lambda, p.lambda};
}

AmplitudeCurve volterra_solve_c1(const ExponentialKernel& kernel, complex c1_0, double t_end,
                                 double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be > 0");
    if (!(kernel.rate >= 0.0)) throw std::invalid_argument("kernel rate must be >= 0");
    const auto n_steps = static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));

    // Over the cell u in [(m-1)h, mh] of the lag u = t_n - s, the linear
    // interpolant of c1 contributes w_near(m) c_{n-m+1} + w_far(m) c_{n-m}.
    const double x = kernel.rate * step;
    const double mean = kernel_mean(x);
    const double moment = kernel_first_moment(x);
    std::vector<double> w_near(n_steps + 1), w_far(n_steps + 1);
    for (std::size_t m = 1; m <= n_steps; ++m) {
        const double scale = kernel(static_cast<double>(m - 1) * step) * step;
        w_near[m] = scale * (mean - moment);
        w_far[m] = scale * moment;
    }

    AmplitudeCurve curve;
    curve.step = step;
    curve.c1.reserve(n_steps + 1);
    curve.c1.push_back(c1_0);
    complex memory_prev{0.0, 0.0};  // memory integral at t_n
    const double implicit = 1.0 + 0.5 * step * w_near[1];
    for (std::size_t n = 0; n < n_steps; ++n) {
        const std::size_t next = n + 1;
        // Memory integral at t_{n+1}, excluding the c_{n+1} term.
        complex partial{0.0, 0.0};
        for (std::size_t j = 0; j <= n; ++j) {
            const std::size_t m = next - j;
            partial += w_far[m] * curve.c1[j];
            if (m >= 2) partial += w_near[m] * curve.c1[j + 1];
        }
        const complex c_next =
            (curve.c1[n] - 0.5 * step * (memory_prev + partial)) / implicit;
        if (std::abs(c_next) > 1.0 + 1e-6) {
            throw InstabilityError("Volterra solver unstable at t = " +
                                   std::to_string(static_cast<double>(next) * step));
        }
        curve.c1.push_back(c_next);
        memory_prev = partial + w_near[1] * c_next;
    }
    return curve;
}

AmplitudeCurve volterra_solve_c1(const jc::JCParams& p, complex c1_0, double t_end, double step) {
    return volterra_solve_c1(ExponentialKernel::from_params(p), c1_0, t_end, step);
}

}  // namespace qent::oracles

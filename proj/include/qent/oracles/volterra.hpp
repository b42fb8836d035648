// volterra.hpp: direct numerical solution of the closed amplitude equation
//   dc1/dt = -int_0^t f(t - t') c1(t') dt'
// for an exponential memory kernel f(t) = amplitude exp(-rate |t|).
//
// The memory integral uses product trapezoidal weights: c1 is interpolated
// linearly between grid points and integrated exactly against the kernel.
// The outer time step is the (implicit, linear) trapezoidal rule, so the
// scheme is second order in the step.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qent/jaynes_cummings.hpp"
#include "qent/qubit.hpp"

namespace qent::oracles {

class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExponentialKernel {
    double amplitude{0.0};
    double rate{0.0};

    double operator()(double t) const noexcept;
    static ExponentialKernel from_params(const jc::JCParams& p);
};

struct AmplitudeCurve {
    double step{0.0};
    std::vector<complex> c1;  // c1(i * step)

    double time(std::size_t i) const noexcept { return step * static_cast<double>(i); }
    double population(std::size_t i) const noexcept { return std::norm(c1[i]); }
    std::size_t size() const noexcept { return c1.size(); }
};

/// Uniform grid 0, step, ..., ceil(t_end / step) * step. O(N^2) in the
/// number of steps. Throws InstabilityError if |c1| exceeds 1 + 1e-6.
AmplitudeCurve volterra_solve_c1(const ExponentialKernel& kernel, complex c1_0, double t_end,
                                 double step);

AmplitudeCurve volterra_solve_c1(const jc::JCParams& p, complex c1_0, double t_end, double step);

}  // namespace qent::oracles

// quadrature.hpp: adaptive Gauss-Kronrod integration and the quadrature
// route to the vacuum decoherence function.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "qent/dephasing.hpp"

namespace qent::oracles {

using RealFunction = std::function<double(double)>;

struct QuadratureResult {
    double value{0.0};
    double error_estimate{0.0};
    std::size_t intervals{0};
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

struct QuadratureOptions {
    double abs_tol{1e-12};
    double rel_tol{0.0};
    std::size_t max_intervals{50000};
};

/// Globally adaptive 7/15-point Gauss-Kronrod over [b0, b_last], starting
/// from the panels delimited by `breakpoints` (sorted, at least two).
/// Stops once the summed error estimate is below max(abs_tol, rel_tol |I|).
QuadratureResult integrate_adaptive(const RealFunction& f, std::span<const double> breakpoints,
                                    const QuadratureOptions& opts = {});

/// int_a^inf f via the substitution w = a + x / (1 - x).
QuadratureResult integrate_to_infinity(const RealFunction& f, double a,
                                       const QuadratureOptions& opts = {});

/// int_0^inf J(w) (1 - cos wt) / w^2 dw with absolute error estimate <= tol.
/// Panels are split at multiples of pi/t up to `tail_start`; the remainder is
/// integrated on a compactified axis.
double quad_gamma_vac(const RealFunction& spectral_density, double t, double tol,
                      double tail_start);

/// Ohmic-family convenience overload; the tail starts at 40 cutoff frequencies.
double quad_gamma_vac(const dephasing::OhmicSpectralDensity& sd, double t, double tol);

}  // namespace qent::oracles

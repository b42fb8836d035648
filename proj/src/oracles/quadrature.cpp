#include "qent/oracles/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace qent::oracles {

namespace {

// Kronrod abscissae (descending) and weights; Gauss points are the odd entries.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const RealFunction& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, std::span<const double> breakpoints,
                                    const QuadratureOptions& opts) {
    if (breakpoints.size() < 2) throw std::invalid_argument("need at least two breakpoints");
    std::priority_queue<Panel> heap;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1])) {
            throw std::invalid_argument("breakpoints must be strictly increasing");
        }
        Panel p = gauss_kronrod(f, breakpoints[i - 1], breakpoints[i]);
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (total_err > target()) {
        if (heap.size() >= opts.max_intervals) {
            throw ConvergenceError("adaptive quadrature exhausted its interval budget", total_err);
        }
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw ConvergenceError("adaptive quadrature hit the resolution limit", total_err);
        }
        heap.pop();
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from the panels to shed the drift of incremental updates.
    QuadratureResult result;
    result.intervals = heap.size();
    while (!heap.empty()) {
        result.value += heap.top().value;
        result.error_estimate += heap.top().error;
        heap.pop();
    }
    return result;
}

QuadratureResult integrate_to_infinity(const RealFunction& f, double a,
                                       const QuadratureOptions& opts) {
    auto mapped = [&](double x) {
        const double one_minus = 1.0 - x;
        const double w = a + x / one_minus;
        if (!std::isfinite(w)) return 0.0;
        const double value = f(w) / (one_minus * one_minus);
        return std::isfinite(value) ? value : 0.0;
    };
    const std::array<double, 5> panels = {0.0, 0.5, 0.9, 0.99, 1.0};
    return integrate_adaptive(mapped, panels, opts);
}

double quad_gamma_vac(const RealFunction& spectral_density, double t, double tol,
                      double tail_start) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    if (!(t >= 0.0)) throw std::domain_error("quad_gamma_vac needs t >= 0");
    if (!(tail_start > 0.0)) throw std::invalid_argument("tail_start must be > 0");
    if (t == 0.0) return 0.0;

    auto integrand = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double s = std::sin(0.5 * w * t);
        return spectral_density(w) * 2.0 * s * s / (w * w);
    };

    std::vector<double> breaks{0.0};
    const double period = std::numbers::pi / t;
    for (std::size_t k = 1; static_cast<double>(k) * period < tail_start; ++k) {
        breaks.push_back(static_cast<double>(k) * period);
    }
    if (tail_start - breaks.back() < 1e-12 * tail_start) breaks.pop_back();
    breaks.push_back(tail_start);

    // Split the budget: the tail is tiny for spectral densities with a cutoff.
    QuadratureOptions body_opts{0.9 * tol, 0.0};
    QuadratureOptions tail_opts{0.1 * tol, 0.0};
    const auto body = integrate_adaptive(integrand, breaks, body_opts);
    const auto tail = integrate_to_infinity(integrand, tail_start, tail_opts);
    return body.value + tail.value;
}

double quad_gamma_vac(const dephasing::OhmicSpectralDensity& sd, double t, double tol) {
    sd.validate();
    auto J = [sd](double w) { return dephasing::spectral_density_eval(sd, w); };
    return quad_gamma_vac(J, t, tol, 40.0 * sd.cutoff);
}

}  // namespace qent::oracles

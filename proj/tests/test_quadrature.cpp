#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qent/dephasing.hpp"
#include "qent/jaynes_cummings.hpp"
#include "qent/oracles/quadrature.hpp"

using namespace qent;
using namespace qent::oracles;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Adaptive, SmoothIntegrands) {
    const std::vector<double> pi_interval{0.0, kPi};
    const std::vector<double> unit{0.0, 1.0};
    EXPECT_NEAR(integrate_adaptive([](double x) { return std::sin(x); }, pi_interval).value, 2.0,
                1e-14);
    EXPECT_NEAR(integrate_adaptive([](double x) { return std::exp(x); }, unit).value,
                std::numbers::e - 1.0, 1e-14);
    const auto peaked = integrate_adaptive([](double x) { return 1e-3 / (x * x + 1e-6); },
                                           std::vector<double>{-1.0, 1.0});
    EXPECT_NEAR(peaked.value, 2.0 * std::atan(1e3), 1e-11);
    EXPECT_GT(peaked.intervals, 10u);
}

TEST(Adaptive, HonoursBreakpointsAndReportsError) {
    const std::vector<double> split{0.0, 0.5, 1.0};
    const auto kink = integrate_adaptive([](double x) { return std::abs(x - 0.5); }, split);
    EXPECT_NEAR(kink.value, 0.25, 1e-15);
    EXPECT_LE(kink.error_estimate, 1e-12);
    EXPECT_EQ(kink.intervals, 2u);
}

TEST(Adaptive, RejectsBadBreakpoints) {
    auto f = [](double x) { return x; };
    EXPECT_THROW(integrate_adaptive(f, std::vector<double>{0.0}), std::invalid_argument);
    EXPECT_THROW(integrate_adaptive(f, std::vector<double>{0.0, 1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(integrate_adaptive(f, std::vector<double>{1.0, 0.0}), std::invalid_argument);
}

TEST(Adaptive, ThrowsWhenBudgetIsExhausted) {
    QuadratureOptions opts;
    opts.abs_tol = 1e-15;
    opts.max_intervals = 8;
    try {
        integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, std::vector<double>{0.0, 1.0},
                           opts);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_GT(e.achieved_error, opts.abs_tol);
    }
}

TEST(ToInfinity, DecayingIntegrands) {
    EXPECT_NEAR(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0).value, 1.0,
                1e-13);
    EXPECT_NEAR(integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 1.0).value,
                kPi / 4.0, 1e-12);
}

TEST(QuadGammaVac, MatchesFrozenReferences) {
    const double tol = 1e-13;
    EXPECT_NEAR(quad_gamma_vac({3.0, 0.2, 1.0}, 1.0, tol), 0.2, 1e-12);
    EXPECT_NEAR(quad_gamma_vac({2.0, 0.1, 1.0}, 1.0, tol), 0.05, 1e-12);
    EXPECT_NEAR(quad_gamma_vac({0.5, 0.25, 1.0}, 3.0, tol), 0.392257573836629855, 1e-12);
    EXPECT_NEAR(quad_gamma_vac({1.5, 0.3, 1.0}, 7.0, tol), 0.380671908641476091, 1e-12);
    EXPECT_NEAR(quad_gamma_vac({1.0, 0.25, 1.0}, 1.0, tol), 0.0866433975699931637, 1e-12);
    EXPECT_EQ(quad_gamma_vac({1.0, 0.25, 1.0}, 0.0, tol), 0.0);
}

TEST(QuadGammaVac, AgreesWithClosedFormAcrossRegimes) {
    for (double s : {0.3, 0.5, 0.9, 1.0, 1.00001, 1.5, 2.0, 3.0, 4.5}) {
        for (double t : {0.05, 0.7, 3.0, 19.0}) {
            const dephasing::OhmicSpectralDensity sd{s, 0.25, 1.3};
            const double closed = dephasing::gamma_vac_closed(sd, t);
            EXPECT_NEAR(quad_gamma_vac(sd, t, 1e-12), closed, 1e-10 * (1.0 + closed))
                << "s = " << s << " t = " << t;
        }
    }
}

TEST(QuadGammaVac, ArbitrarySpectralDensity) {
    // J = w^3 on [0, 1]: int (1 - cos wt) w dw has an elementary antiderivative.
    auto J = [](double w) { return w <= 1.0 ? w * w * w : 0.0; };
    const double t = 2.0;
    const double exact = 0.5 - (std::sin(t) / t + (std::cos(t) - 1.0) / (t * t));
    EXPECT_NEAR(quad_gamma_vac(J, t, 1e-12, 1.0), exact, 1e-11);
    EXPECT_THROW(quad_gamma_vac(J, -1.0, 1e-12, 1.0), std::domain_error);
    EXPECT_THROW(quad_gamma_vac(J, 1.0, 0.0, 1.0), std::invalid_argument);
}

TEST(MemoryKernel, FullLineFourierTransformOfLorentzian) {
    // f(t) = int_{-inf}^{inf} J(w) exp(i(w0 - w)t) dw; the sine part cancels
    // by symmetry, the truncated cosine tail is below 1e-9.
    const jc::JCParams p{0.35, 1.2, 4.0};
    for (double t : {0.0, 0.5, 2.0}) {
        const double period = t > 0.0 ? kPi / t : 10.0;
        std::vector<double> cuts;
        for (double w = 0.0; w < 1e4; w += period) cuts.push_back(w);
        auto integrand = [&](double d) {
            const double jd = jc::lorentzian_density(p, p.omega0 + d);
            return 2.0 * jd * std::cos(d * t);
        };
        QuadratureOptions opts;
        opts.abs_tol = 1e-13;
        opts.max_intervals = 200000;
        double value = integrate_adaptive(integrand, cuts, opts).value;
        if (t == 0.0)
            value += integrate_to_infinity(integrand, cuts.back(), opts).value;
        EXPECT_NEAR(value, jc::memory_kernel(p, t).real(), 1e-8) << "t = " << t;
    }
}

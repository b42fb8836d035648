#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qent/jaynes_cummings.hpp"
#include "qent/oracles/jc_modes.hpp"

using namespace qent;
using namespace qent::oracles;

namespace {

double worst_error(const jc::JCParams& p, std::size_t n_modes, double half_width, double t_end) {
    const auto modes = sample_lorentzian_modes(p, n_modes, half_width);
    const auto res = jc_discrete_mode_evolution(p, modes, jc::JCInitialState::from_population(1.0),
                                                t_end, 2e-3, 5);
    double worst = 0.0;
    for (std::size_t i = 0; i < res.times.size(); ++i)
        worst = std::max(worst,
                         std::abs(res.population[i] - jc::population_c1_sq(p, 1.0, res.times[i])));
    return worst;
}

}  // namespace

TEST(LorentzianModes, GridAndWeights) {
    const jc::JCParams p{0.5, 2.0, 10.0};
    const auto modes = sample_lorentzian_modes(p, 4, 1.0);
    ASSERT_EQ(modes.size(), 4u);
    EXPECT_DOUBLE_EQ(modes.omega.front(), 8.5);
    EXPECT_DOUBLE_EQ(modes.omega.back(), 11.5);
    EXPECT_NEAR(modes.g_sq[1], jc::lorentzian_density(p, 9.5) * 1.0, 1e-16);
    // sum g^2 approaches int J = gamma0 lambda / 2 as the band widens.
    const auto wide = sample_lorentzian_modes(p, 200000, 5000.0);
    EXPECT_NEAR(std::accumulate(wide.g_sq.begin(), wide.g_sq.end(), 0.0), 0.5, 1e-3);
    EXPECT_THROW(sample_lorentzian_modes(p, 0), std::invalid_argument);
    EXPECT_THROW(sample_lorentzian_modes(p, 10, 0.0), std::invalid_argument);
}

TEST(DiscreteModes, UncoupledModesLeaveAmplitudeAlone) {
    const auto p = jc::JCParams::from_K(1.0);
    FieldModes modes{{-1.0, 0.5, 2.0}, {0.0, 0.0, 0.0}};
    const auto res = jc_discrete_mode_evolution(p, modes, jc::JCInitialState::from_population(0.7),
                                                2.0, 0.01, 10);
    ASSERT_EQ(res.times.size(), 21u);
    for (double c : res.population) EXPECT_NEAR(c, 0.7, 1e-15);
    EXPECT_LT(res.norm_residual, 1e-14);
}

TEST(DiscreteModes, SingleModeRabiOscillation) {
    // One resonant mode with coupling g: |c1|^2 = cos^2(g t).
    const auto p = jc::JCParams::from_K(1.0);
    FieldModes modes{{p.omega0}, {0.09}};
    const auto res = jc_discrete_mode_evolution(p, modes, jc::JCInitialState::from_population(1.0),
                                                10.0, 1e-2, 100);
    for (std::size_t i = 0; i < res.times.size(); ++i)
        EXPECT_NEAR(res.population[i], std::pow(std::cos(0.3 * res.times[i]), 2), 1e-10);
}

TEST(DiscreteModes, ConvergesWithMoreModes) {
    const auto p = jc::JCParams::from_K(5.0);
    // 50 modes recur (2 pi / dw ~ 6) before t_end; 200 modes are band-limited.
    const double e_coarse = worst_error(p, 50, 25.0, 8.0);
    const double e_mid = worst_error(p, 100, 25.0, 8.0);
    const double e_fine = worst_error(p, 200, 25.0, 8.0);
    EXPECT_GT(e_coarse, 0.1);
    EXPECT_LT(e_mid, 1e-3);
    EXPECT_LT(e_fine, e_mid);
}

TEST(DiscreteModes, WiderBandIsMoreAccurate) {
    const auto p = jc::JCParams::from_K(5.0);
    const double narrow = worst_error(p, 400, 10.0, 5.0);
    const double wide = worst_error(p, 2000, 50.0, 5.0);
    EXPECT_LT(wide, 0.1 * narrow);
}

TEST(DiscreteModes, ReportsNormDrift) {
    const auto p = jc::JCParams::from_K(5.0);
    const auto modes = sample_lorentzian_modes(p, 200);
    try {
        jc_discrete_mode_evolution(p, modes, jc::JCInitialState::from_population(1.0), 5.0, 0.5);
        FAIL() << "expected IntegrationError";
    } catch (const IntegrationError& e) {
        EXPECT_GT(e.norm_residual, kNormResidualTolerance);
    }
    EXPECT_THROW(jc_discrete_mode_evolution(p, modes, jc::JCInitialState::from_population(1.0),
                                            1.0, 0.01, 0),
                 std::invalid_argument);
}

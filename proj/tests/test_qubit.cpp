#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qent/qubit.hpp"
#include "random_points.hpp"

using namespace qent;

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

TEST(BlochModulus, PureAndMaximallyMixed) {
    EXPECT_DOUBLE_EQ(bloch_modulus({complex(0.5, 0.0), 0.0}), 1.0);
    EXPECT_DOUBLE_EQ(bloch_modulus({complex(0.0, 0.0), -1.0}), 1.0);
    EXPECT_EQ(bloch_modulus({}), 0.0);
    EXPECT_NEAR(bloch_modulus({complex(0.15, -0.2), 0.0}), 0.5, 1e-15);
}

TEST(BlochModulus, ClampsRoundoffButRejectsOutsideBall) {
    EXPECT_EQ(bloch_modulus({complex(0.0, 0.0), 1.0 + 5e-10}), 1.0);
    EXPECT_THROW(bloch_modulus({complex(0.0, 0.0), 1.0 + 1e-6}), std::domain_error);
    EXPECT_THROW(bloch_modulus({complex(0.6, 0.0), 0.0}), std::domain_error);
}

TEST(Entropy, ReferenceValues) {
    EXPECT_EQ(entropy_from_modulus(1.0), 0.0);
    EXPECT_NEAR(entropy_from_modulus(0.0), kLn2, 1e-15);
    EXPECT_NEAR(entropy_from_modulus(0.6), 0.500402423538187879, 1e-15);
    EXPECT_NEAR(entropy_from_modulus(std::exp(-0.1)), 0.191330957460846520, 1e-14);
    EXPECT_NEAR(entropy_from_modulus(std::exp(-0.2)), 0.304003656520440131, 1e-14);
}

TEST(Entropy, RejectsNegativeAndLargeModulus) {
    EXPECT_THROW(entropy_from_modulus(-0.1), std::domain_error);
    EXPECT_THROW(entropy_from_modulus(1.01), std::domain_error);
    EXPECT_THROW(entropy_from_modulus(std::nan("")), std::domain_error);
    EXPECT_EQ(entropy_from_modulus(1.0 + 1e-10), 0.0);
}

TEST(Entropy, NearlyPureStatesStayNonNegative) {
    for (double eps : {1e-3, 1e-8, 1e-14, 1e-16}) {
        const double s = entropy_from_modulus(1.0 - eps);
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, eps * (1.0 - std::log(eps / 2.0)));
    }
}

TEST(Entropy, StrictlyDecreasingOnFineGrid) {
    double prev = entropy_from_modulus(0.0);
    const int n = 10000;
    for (int i = 1; i <= n; ++i) {
        const double s = entropy_from_modulus(static_cast<double>(i) / n);
        ASSERT_LT(s, prev) << "at v = " << static_cast<double>(i) / n;
        prev = s;
    }
}

TEST(DensityMatrix, LayoutFollowsSpinBasis) {
    const BlochVector b{complex(0.1, 0.2), 0.4};
    const auto rho = density_matrix_from_bloch(b);
    EXPECT_DOUBLE_EQ(rho(0, 0).real(), 0.7);
    EXPECT_DOUBLE_EQ(rho(1, 1).real(), 0.3);
    EXPECT_EQ(rho(1, 0), complex(0.1, 0.2));
    EXPECT_EQ(rho(0, 1), complex(0.1, -0.2));
    rho.validate();
}

TEST(DensityMatrix, ValidateRejectsUnphysicalMatrices) {
    EXPECT_THROW(QubitDensityMatrix(0.5, 0.1, 0.2, 0.5).validate(), std::domain_error);
    EXPECT_THROW(QubitDensityMatrix(0.6, 0.0, 0.0, 0.5).validate(), std::domain_error);
    EXPECT_THROW(QubitDensityMatrix(1.2, 0.0, 0.0, -0.2).validate(), std::domain_error);
    EXPECT_THROW(QubitDensityMatrix(0.5, 0.6, 0.6, 0.5).validate(), std::domain_error);
}

TEST(Schmidt, WeightsAreReducedEigenvalues) {
    const auto w = schmidt_weights_from_modulus(0.6);
    EXPECT_DOUBLE_EQ(w.w0, 0.8);
    EXPECT_DOUBLE_EQ(w.w1, 0.2);
    EXPECT_NEAR(entropy_from_schmidt(w), 0.500402423538187879, 1e-15);
    EXPECT_EQ(entropy_from_schmidt({1.0, 0.0}), 0.0);
}

TEST(Rapidity, ReferenceAndErrors) {
    EXPECT_NEAR(rapidity_from_modulus(0.5), 0.549306144334054846, 1e-15);
    EXPECT_EQ(rapidity_from_modulus(0.0), 0.0);
    EXPECT_THROW(rapidity_from_modulus(1.0), std::domain_error);
    EXPECT_THROW(rapidity_from_modulus(-0.2), std::domain_error);
    EXPECT_THROW(density_matrix_from_rapidity({complex(0.5, 0.0), 0.0}), std::domain_error);
}

TEST(Rapidity, MaximallyMixedIsHalfIdentity) {
    const auto rho = density_matrix_from_rapidity({});
    EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-16);
    EXPECT_NEAR(std::abs(rho(1, 0)), 0.0, 1e-16);
}

// Properties over the Bloch ball.

TEST(QubitProperties, RoundTripAndPhysicality) {
    std::mt19937_64 rng(qent_test::kSeed);
    for (int i = 0; i < 2000; ++i) {
        const auto b = qent_test::random_bloch(rng);
        const auto rho = density_matrix_from_bloch(b);
        ASSERT_NO_THROW(rho.validate());
        const auto back = bloch_from_density_matrix(rho);
        ASSERT_NEAR(std::abs(back.v_plus - b.v_plus), 0.0, 1e-15);
        ASSERT_NEAR(back.v3, b.v3, 1e-15);
    }
}

TEST(QubitProperties, EntropyAgreesWithEigenvalues) {
    std::mt19937_64 rng(qent_test::kSeed + 1);
    for (int i = 0; i < 2000; ++i) {
        const auto b = qent_test::random_bloch(rng);
        const double v = bloch_modulus(b);
        const double s = entropy_from_modulus(v);
        ASSERT_GE(s, 0.0);
        ASSERT_LE(s, kLn2);
        ASSERT_NEAR(s, entropy_from_density_matrix(density_matrix_from_bloch(b)), 1e-12);
        ASSERT_NEAR(s, entropy_from_schmidt(schmidt_weights_from_modulus(v)), 1e-12);
    }
}

TEST(QubitProperties, RapidityFormReproducesMatrix) {
    std::mt19937_64 rng(qent_test::kSeed + 2);
    for (int i = 0; i < 2000; ++i) {
        auto b = qent_test::random_bloch(rng);
        if (bloch_modulus(b) > 0.999999) continue;
        const auto a = density_matrix_from_bloch(b);
        const auto r = density_matrix_from_rapidity(b);
        for (int row = 0; row < 2; ++row)
            for (int col = 0; col < 2; ++col)
                ASSERT_NEAR(std::abs(a(row, col) - r(row, col)), 0.0, 1e-10);
    }
}

TEST(QubitProperties, EntropyInvariantUnderRotation) {
    std::mt19937_64 rng(qent_test::kSeed + 3);
    for (int i = 0; i < 500; ++i) {
        const auto b = qent_test::random_bloch(rng);
        const double phi = qent_test::uniform(rng, 0.0, 2.0 * std::numbers::pi);
        BlochVector rotated{b.v_plus * std::polar(1.0, phi), b.v3};
        ASSERT_NEAR(entropy_from_density_matrix(density_matrix_from_bloch(b)),
                    entropy_from_density_matrix(density_matrix_from_bloch(rotated)), 1e-13);
    }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qent/verify.hpp"

using namespace qent;

namespace {

bool suite_has_failure(const std::vector<verify::CheckResult>& results, const std::string& crit) {
    return std::any_of(results.begin(), results.end(), [&](const verify::CheckResult& r) {
        return r.criterion == crit && !r.passed;
    });
}

}  // namespace

TEST(Verify, SuiteNames) {
    const auto& names = verify::suite_names();
    EXPECT_EQ(names.size(), 8u);
    EXPECT_EQ(names.front(), "qubit-core");
    EXPECT_THROW(verify::run("no-such-suite"), std::invalid_argument);
}

TEST(Verify, FastSuitesPassAndCoverTheirCriteria) {
    std::set<std::string> seen;
    for (const char* suite : {"qubit-core", "dephasing-limits", "schmidt", "jc-entropy"}) {
        const auto results = verify::run(suite);
        ASSERT_FALSE(results.empty());
        for (const auto& r : results) {
            EXPECT_TRUE(r.passed) << verify::format_line(r);
            EXPECT_EQ(r.suite, suite);
            seen.insert(r.criterion);
        }
        EXPECT_TRUE(verify::all_passed(results));
    }
    for (const char* ac : {"AC2", "AC3", "AC4", "AC7", "AC8", "AC9", "AC10"})
        EXPECT_TRUE(seen.count(ac)) << ac;
}

TEST(Verify, FormatLineMentionsVerdict) {
    verify::CheckResult r{"s", "check", "AC1", 2e-3, 1e-3, false, 0.1};
    const auto line = verify::format_line(r);
    EXPECT_NE(line.find("FAIL"), std::string::npos);
    EXPECT_NE(line.find("check"), std::string::npos);
    EXPECT_FALSE(verify::all_passed({r}));
}

// Negative controls: corrupted closed forms must be caught.

TEST(VerifyNegative, FlippedGammaSignFailsDephasingChecks) {
    verify::ClosedForms bad;
    bad.gamma_vac = [](const dephasing::OhmicSpectralDensity& sd, double t) {
        return -dephasing::gamma_vac_closed(sd, t);
    };
    EXPECT_TRUE(suite_has_failure(verify::run("dephasing-quadrature", bad), "AC1"));
    const auto limits = verify::run("dephasing-limits", bad);
    EXPECT_TRUE(suite_has_failure(limits, "AC2"));
    EXPECT_TRUE(suite_has_failure(limits, "AC3"));
    EXPECT_TRUE(suite_has_failure(limits, "AC4"));
}

TEST(VerifyNegative, SlightlyWrongGammaFailsQuadratureCheck) {
    verify::ClosedForms bad;
    bad.gamma_vac = [](const dephasing::OhmicSpectralDensity& sd, double t) {
        return dephasing::gamma_vac_closed(sd, t) * (1.0 + 1e-5);
    };
    EXPECT_TRUE(suite_has_failure(verify::run("dephasing-quadrature", bad), "AC1"));
}

TEST(VerifyNegative, WrongPopulationFailsJCChecks) {
    verify::ClosedForms bad;
    bad.population = [](const jc::JCParams& p, double c0, double t) {
        // Markovian decay instead of the exact envelope.
        return c0 * std::exp(-p.gamma0 * t);
    };
    EXPECT_TRUE(suite_has_failure(verify::run("jc-volterra", bad), "AC5"));
    EXPECT_TRUE(suite_has_failure(verify::run("jc-entropy", bad), "AC7"));
}

TEST(VerifyNegative, TrappedPopulationFailsPeakEntropyCheck) {
    // Any decay through c0/2 reaches the same peak, so break that instead.
    verify::ClosedForms bad;
    bad.population = [](const jc::JCParams& p, double c0, double t) {
        return c0 * (0.7 + 0.3 * std::exp(-p.gamma0 * t));
    };
    EXPECT_TRUE(suite_has_failure(verify::run("jc-entropy", bad), "AC8"));
}

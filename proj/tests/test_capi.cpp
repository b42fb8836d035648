#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qent/qent.h"

TEST(CApi, VersionAndStatusStrings) {
    EXPECT_EQ(qent_api_version(), QENT_API_VERSION);
    EXPECT_STRNE(qent_version(), "");
    EXPECT_STRNE(qent_status_string(QENT_ERR_DOMAIN), qent_status_string(QENT_OK));
}

TEST(CApi, ScalarFunctions) {
    double out = 0.0;
    ASSERT_EQ(qent_entropy_from_modulus(0.6, &out), QENT_OK);
    EXPECT_NEAR(out, 0.500402423538187879, 1e-15);
    ASSERT_EQ(qent_bloch_modulus(0.15, -0.2, 0.0, &out), QENT_OK);
    EXPECT_NEAR(out, 0.5, 1e-15);
    double w0 = 0.0, w1 = 0.0;
    ASSERT_EQ(qent_schmidt_weights(0.6, &w0, &w1), QENT_OK);
    EXPECT_DOUBLE_EQ(w0, 0.8);
    ASSERT_EQ(qent_gamma_vac(1.0, 0.25, 1.0, 1.0, &out), QENT_OK);
    EXPECT_NEAR(out, 0.0866433975699931637, 1e-16);
    ASSERT_EQ(qent_gamma_vac_quadrature(0.5, 0.25, 1.0, 3.0, 1e-12, &out), QENT_OK);
    EXPECT_NEAR(out, 0.392257573836629855, 1e-11);
    ASSERT_EQ(qent_entropy_limit_dephasing(2.0, 0.2, 1.0, 0.0, &out), QENT_OK);
    EXPECT_NEAR(out, 0.304003656520440131, 1e-14);
    ASSERT_EQ(qent_jc_population(0.1, 1.0, 1.0, 3.0, &out), QENT_OK);
    EXPECT_NEAR(out, 0.810853817499505198, 1e-15);
    ASSERT_EQ(qent_jc_max_entropy_time(0.5, 1.0, 1.0, &out), QENT_OK);
    EXPECT_NEAR(out, 2.15592090020090590, 1e-12);
}

TEST(CApi, ErrorCodesAndMessages) {
    double out = 0.0;
    EXPECT_EQ(qent_entropy_from_modulus(1.5, &out), QENT_ERR_DOMAIN);
    EXPECT_NE(std::string(qent_last_error()).find("Bloch modulus"), std::string::npos);
    EXPECT_EQ(qent_gamma_vac_infinity(0.5, 0.1, 1.0, &out), QENT_ERR_DOMAIN);
    EXPECT_EQ(qent_gamma_vac(-1.0, 0.1, 1.0, 1.0, &out), QENT_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(qent_jc_max_entropy_time(0.5, 1.0, 0.8, &out), QENT_ERR_NOT_FOUND);
    EXPECT_EQ(qent_entropy_from_modulus(0.5, nullptr), QENT_ERR_INVALID_ARGUMENT);
    ASSERT_EQ(qent_entropy_from_modulus(0.5, &out), QENT_OK);
    EXPECT_STREQ(qent_last_error(), "");
}

TEST(CApi, DephasingTrajectoryHandle) {
    const qent_dephasing_params params{1.0, 0.25, 1.0, 0.0,
                                       std::sqrt(0.5), 0.0, std::sqrt(0.5), 0.0};
    const double times[] = {0.0, 1.0};
    qent_trajectory* traj = nullptr;
    ASSERT_EQ(qent_dephasing_trajectory_new(&params, times, 2, &traj), QENT_OK);
    ASSERT_EQ(qent_trajectory_size(traj), 2u);
    qent_record rec{};
    ASSERT_EQ(qent_trajectory_record(traj, 1, &rec), QENT_OK);
    EXPECT_NEAR(rec.v, 0.917004043204671232, 1e-15);
    EXPECT_NEAR(rec.entropy, 0.172675928881293021, 1e-14);
    EXPECT_EQ(qent_trajectory_record(traj, 2, &rec), QENT_ERR_INVALID_ARGUMENT);
    qent_trajectory_free(traj);
    qent_trajectory_free(nullptr);
    EXPECT_EQ(qent_trajectory_size(nullptr), 0u);

    const double bad_times[] = {1.0, 0.5};
    traj = nullptr;
    EXPECT_EQ(qent_dephasing_trajectory_new(&params, bad_times, 2, &traj),
              QENT_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(traj, nullptr);
}

TEST(CApi, JCTrajectoryAndVolterra) {
    const qent_jc_params params{0.5, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0};
    std::vector<double> times;
    for (int i = 0; i <= 50; ++i) times.push_back(0.1 * i);
    qent_trajectory* traj = nullptr;
    ASSERT_EQ(qent_jc_trajectory_new(&params, times.data(), times.size(), &traj), QENT_OK);
    std::vector<double> volterra(times.size());
    ASSERT_EQ(qent_jc_population_volterra(0.5, 1.0, 1.0, times.data(), times.size(), 1e-3,
                                          volterra.data()),
              QENT_OK);
    for (size_t i = 0; i < times.size(); ++i) {
        qent_record rec{};
        ASSERT_EQ(qent_trajectory_record(traj, i, &rec), QENT_OK);
        EXPECT_NEAR(rec.primary, volterra[i], 1e-6);
    }
    qent_trajectory_free(traj);

    const double single[] = {0.5};
    double one = 0.0;
    ASSERT_EQ(qent_jc_population_volterra(0.5, 1.0, 1.0, single, 1, 1e-3, &one), QENT_OK);
    double closed = 0.0;
    ASSERT_EQ(qent_jc_population(0.5, 1.0, 1.0, 0.5, &closed), QENT_OK);
    EXPECT_NEAR(one, closed, 1e-6);

    const double ragged[] = {0.0, 0.1, 0.1234567};
    double sink[3];
    EXPECT_EQ(qent_jc_population_volterra(0.5, 1.0, 1.0, ragged, 3, 1e-2, sink),
              QENT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, VerifyReportAndFaultInjection) {
    ASSERT_GE(qent_verify_suite_count(), 8u);
    EXPECT_STREQ(qent_verify_suite_name(0), "qubit-core");
    EXPECT_EQ(qent_verify_suite_name(1000), nullptr);

    qent_report* report = nullptr;
    ASSERT_EQ(qent_verify_run("dephasing-limits", QENT_FAULT_NONE, &report), QENT_OK);
    EXPECT_EQ(qent_report_all_passed(report), 1);
    qent_check check{};
    ASSERT_EQ(qent_report_check(report, 0, &check), QENT_OK);
    EXPECT_STREQ(check.suite, "dephasing-limits");
    qent_report_free(report);

    report = nullptr;
    ASSERT_EQ(qent_verify_run("dephasing-limits", QENT_FAULT_GAMMA_SIGN, &report), QENT_OK);
    EXPECT_EQ(qent_report_all_passed(report), 0);
    qent_report_free(report);

    report = nullptr;
    ASSERT_EQ(qent_verify_run("jc-entropy", QENT_FAULT_POPULATION_SIGN, &report), QENT_OK);
    EXPECT_EQ(qent_report_all_passed(report), 0);
    qent_report_free(report);

    EXPECT_EQ(qent_verify_run("bogus", QENT_FAULT_NONE, &report), QENT_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(qent_verify_run(nullptr, static_cast<qent_fault>(7), &report),
              QENT_ERR_INVALID_ARGUMENT);
}

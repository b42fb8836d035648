// verify.hpp: oracle-versus-closed-form checks with pinned tolerances.
//
// Every check reports the worst observed error and the tolerance it is held
// to; a check passes iff max_error <= tolerance. Suites group checks by the
// pair of routes they compare.

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qent/dephasing.hpp"
#include "qent/jaynes_cummings.hpp"

namespace qent::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string criterion;  // acceptance criterion label, e.g. "AC5"
    double max_error{0.0};
    double tolerance{0.0};
    bool passed{false};
    double seconds{0.0};
};

/// Closed forms under test. Tests substitute corrupted versions to make sure
/// the checks can fail.
struct ClosedForms {
    std::function<double(const dephasing::OhmicSpectralDensity&, double)> gamma_vac =
        dephasing::gamma_vac_closed;
    std::function<double(const jc::JCParams&, double, double)> population = jc::population_c1_sq;
};

/// Available suites in report order.
const std::vector<std::string>& suite_names();

/// Runs one suite, or all of them for "all" / empty. Independent suites run
/// concurrently; results keep report order. Throws std::invalid_argument on
/// an unknown suite name.
std::vector<CheckResult> run(std::string_view suite = "all", const ClosedForms& forms = {});

bool all_passed(const std::vector<CheckResult>& results) noexcept;

/// "name  max_error  tolerance  PASS|FAIL" with fixed formatting.
std::string format_line(const CheckResult& r);

}  // namespace qent::verify

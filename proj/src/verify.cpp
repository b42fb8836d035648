#include "qent/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qent/oracles/bath.hpp"
#include "qent/oracles/fock.hpp"
#include "qent/oracles/jc_modes.hpp"
#include "qent/oracles/quadrature.hpp"
#include "qent/oracles/volterra.hpp"
#include "qent/qubit.hpp"

namespace qent::verify {

namespace {

using Clock = std::chrono::steady_clock;
using dephasing::OhmicSpectralDensity;
using Results = std::vector<CheckResult>;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void add(Results& out, std::string_view suite, std::string name, std::string criterion,
         double max_error, double tolerance, double seconds = 0.0) {
    const bool ok = std::isfinite(max_error) && max_error <= tolerance;
    out.push_back({std::string(suite), std::move(name), std::move(criterion), max_error, tolerance,
                   ok, seconds});
}

// Entropy straight from the two eigenvalues (1 +/- v)/2, kept separate from
// the closed-form expression it checks.
double eigenvalue_entropy(double v) {
    return -(xlogx(0.5 * (1.0 + v)) + xlogx(0.5 * (1.0 - v)));
}

std::string fmt(const char* pattern, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, x);
    return buf;
}

// ---------------------------------------------------------------- qubit core

Results qubit_core_suite(const ClosedForms&) {
    constexpr std::string_view suite = "qubit-core";
    const auto start = Clock::now();
    std::mt19937_64 rng(20120611);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform;

    double entropy_err = 0.0, roundtrip_err = 0.0, rapidity_err = 0.0, schmidt_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = normal(rng), y = normal(rng), z = normal(rng);
        const double r = std::cbrt(uniform(rng)) / std::sqrt(x * x + y * y + z * z);
        const BlochVector b{complex{0.5 * r * x, 0.5 * r * y}, r * z};
        const double v = bloch_modulus(b);

        const auto rho = density_matrix_from_bloch(b);
        entropy_err = std::max(entropy_err,
                               std::abs(entropy_from_modulus(v) - entropy_from_density_matrix(rho)));
        schmidt_err = std::max(schmidt_err, std::abs(entropy_from_schmidt(schmidt_weights_from_modulus(v)) -
                                                     entropy_from_modulus(v)));

        const auto back = bloch_from_density_matrix(rho);
        roundtrip_err = std::max({roundtrip_err, std::abs(back.v_plus - b.v_plus),
                                  std::abs(back.v3 - b.v3)});

        if (v <= 1.0 - 1e-6) {
            const auto rho_exp = density_matrix_from_rapidity(b);
            for (int row = 0; row < 2; ++row) {
                for (int col = 0; col < 2; ++col) {
                    rapidity_err = std::max(rapidity_err, std::abs(rho_exp(row, col) - rho(row, col)));
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    Results out;
    add(out, suite, "entropy-formula-vs-eigenvalues", "AC10", entropy_err, 1e-12, elapsed);
    add(out, suite, "bloch-matrix-roundtrip", "AC10", roundtrip_err, 1e-12, elapsed);
    add(out, suite, "rapidity-reconstruction", "AC10", rapidity_err, 1e-10, elapsed);
    add(out, suite, "schmidt-weights-entropy", "AC10", schmidt_err, 1e-12, elapsed);
    return out;
}

// ----------------------------------------------------------------- dephasing

Results dephasing_quadrature_suite(const ClosedForms& forms) {
    constexpr std::string_view suite = "dephasing-quadrature";
    const auto start = Clock::now();
    const auto grid = uniform_grid(20.0, 200);
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
        const OhmicSpectralDensity sd{s, 0.25, 1.0};
        for (double t : grid) {
            const double closed = forms.gamma_vac(sd, t);
            const double quad = oracles::quad_gamma_vac(sd, t, 1e-13);
            const double err = quad == 0.0 ? std::abs(closed) : std::abs(closed - quad) / std::abs(quad);
            worst = std::max(worst, err);
        }
    }
    const double elapsed = seconds_since(start);
    Results out;
    add(out, suite, "gamma-closed-vs-quadrature", "AC1", worst, 1e-6, elapsed);
    add(out, suite, "gamma-quadrature-runtime-s", "AC1", elapsed, 10.0, elapsed);
    return out;
}

Results dephasing_limits_suite(const ClosedForms& forms) {
    constexpr std::string_view suite = "dephasing-limits";
    Results out;
    auto start = Clock::now();

    double limit_err = 0.0;
    for (double s : {2.0, 3.0}) {
        const OhmicSpectralDensity sd{s, 0.25, 1.0};
        limit_err = std::max(limit_err, std::abs(forms.gamma_vac(sd, 1e4) - dephasing::gamma_vac_infinity(sd)) /
                                            sd.coupling);
    }
    add(out, suite, "gamma-long-time-limit", "AC2", limit_err, 1e-3, seconds_since(start));

    start = Clock::now();
    const auto grid = uniform_grid(20.0, 10000);
    double worst_drop = 0.0;
    for (double s : {0.5, 1.0}) {
        const OhmicSpectralDensity sd{s, 0.25, 1.0};
        double prev = forms.gamma_vac(sd, grid.front());
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double cur = forms.gamma_vac(sd, grid[i]);
            worst_drop = std::max(worst_drop, prev - cur);
            prev = cur;
        }
    }
    add(out, suite, "gamma-nondecreasing-s<=1", "AC3", worst_drop, 1e-12, seconds_since(start));

    start = Clock::now();
    {
        const OhmicSpectralDensity sd{3.0, 0.25, 1.0};
        double peak = 0.0;
        for (double t : grid) peak = std::max(peak, forms.gamma_vac(sd, t));
        // Shortfall of the overshoot: <= 0 once gamma exceeds gamma(inf) + 1e-6 somewhere.
        const double shortfall = dephasing::gamma_vac_infinity(sd) + 1e-6 - peak;
        add(out, suite, "gamma-overshoot-s3", "AC3", shortfall, 0.0, seconds_since(start));
    }

    start = Clock::now();
    {
        const OhmicSpectralDensity sd{0.5, 0.25, 1.0};
        const double v = dephasing::bloch_modulus_dephasing(0.0, forms.gamma_vac(sd, 1e3));
        add(out, suite, "entropy-limit-complete", "AC4",
            std::numbers::ln2 - entropy_from_modulus(v), 1e-3, seconds_since(start));
    }
    start = Clock::now();
    {
        const OhmicSpectralDensity sd{2.0, 0.1, 1.0};
        const double v = dephasing::bloch_modulus_dephasing(0.0, forms.gamma_vac(sd, 1e3));
        const double expected = eigenvalue_entropy(std::exp(-0.1));
        add(out, suite, "entropy-limit-incomplete", "AC4",
            std::abs(entropy_from_modulus(v) - expected), 1e-6, seconds_since(start));
    }
    return out;
}

Results dephasing_exact_suite(const ClosedForms&) {
    constexpr std::string_view suite = "dephasing-exact";
    Results out;
    auto start = Clock::now();
    const OhmicSpectralDensity sd{1.0, 0.25, 1.0};
    const auto bath = oracles::discretize_bath(sd, 2000, 40.0);
    const double disc = oracles::discrete_gamma_vac(bath, 1.0);
    const double quad = oracles::quad_gamma_vac(sd, 1.0, 1e-13);
    add(out, suite, "discrete-bath-vs-quadrature", "", std::abs(disc - quad), 1e-4,
        seconds_since(start));

    start = Clock::now();
    const auto init = dephasing::DephasingInitialState::from_v3(0.2);
    double identity_err = 0.0;
    for (double t : {0.0, 0.7, 1.9, 5.0, 12.5}) {
        const auto rho = oracles::dephasing_exact_reduced_state(bath, init, 0.9, t);
        const double expected = std::abs(init.a0 * init.a1) * std::exp(-oracles::discrete_gamma_vac(bath, t));
        identity_err = std::max(identity_err, std::abs(std::abs(rho(1, 0)) - expected));
    }
    add(out, suite, "coherent-overlap-identity", "", identity_err, 1e-12, seconds_since(start));
    return out;
}

Results schmidt_suite(const ClosedForms&) {
    constexpr std::string_view suite = "schmidt";
    const auto start = Clock::now();
    const oracles::DiscreteBath bath{{{1.0, 0.0225}, {1.7, 0.04}}};
    const dephasing::DephasingInitialState init{complex{std::sqrt(0.3), 0.0},
                                                std::sqrt(0.7) * std::exp(complex{0.0, 0.4})};
    const double omega0 = 0.8;

    double entropy_gap = 0.0, third_eig = 0.0, state_err = 0.0;
    for (double t : {0.5, 1.3, 2.7, 4.1, 6.0}) {
        const auto fock = oracles::fock_truncated_evolution(bath, 8, init, omega0, t);
        double s_b = 0.0;
        for (double lam : fock.rho_b_spectrum) s_b -= xlogx(lam);
        entropy_gap = std::max(entropy_gap, std::abs(entropy_from_density_matrix(fock.rho_a) - s_b));
        third_eig = std::max(third_eig, std::abs(fock.rho_b_spectrum.at(2)));

        const auto exact = oracles::dephasing_exact_reduced_state(bath, init, omega0, t);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                state_err = std::max(state_err, std::abs(fock.rho_a(r, c) - exact(r, c)));
            }
        }
    }
    const double elapsed = seconds_since(start);
    Results out;
    add(out, suite, "schmidt-entropy-equality", "AC9", entropy_gap, 1e-8, elapsed);
    add(out, suite, "schmidt-rank-third-eigenvalue", "AC9", third_eig, 1e-10, elapsed);
    add(out, suite, "fock-vs-coherent-state", "AC9", state_err, 1e-6, elapsed);
    return out;
}

// ----------------------------------------------------------- Jaynes-Cummings

double volterra_error(const jc::JCParams& p, const ClosedForms& forms, double step) {
    const auto curve = oracles::volterra_solve_c1(p, complex{1.0, 0.0}, 10.0 / p.lambda, step);
    double worst = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        worst = std::max(worst, std::abs(curve.population(i) - forms.population(p, 1.0, curve.time(i))));
    }
    return worst;
}

Results jc_volterra_suite(const ClosedForms& forms) {
    constexpr std::string_view suite = "jc-volterra";
    Results out;
    for (double K : {0.2, 1.0, 5.0}) {
        const auto start = Clock::now();
        const auto p = jc::JCParams::from_K(K);
        const double coarse = volterra_error(p, forms, 1e-3 / p.lambda);
        const double fine = volterra_error(p, forms, 0.5e-3 / p.lambda);
        const double elapsed = seconds_since(start);
        const std::string tag = fmt("K=%g", K);
        add(out, suite, "volterra-vs-closed " + tag, "AC5", coarse, 1e-6, elapsed);
        // Second order: halving the step divides the error by 3.5..4.5.
        add(out, suite, "volterra-order " + tag + " |ratio-4|", "AC5", std::abs(coarse / fine - 4.0),
            0.5, elapsed);
    }
    return out;
}

Results jc_discrete_suite(const ClosedForms& forms) {
    constexpr std::string_view suite = "jc-discrete";
    const auto start = Clock::now();
    Results out;
    double worst_norm = 0.0;
    for (double K : {0.2, 5.0}) {
        const auto p = jc::JCParams::from_K(K);
        const auto modes = oracles::sample_lorentzian_modes(p, 2000, 50.0);
        double worst = 0.0;
        try {
            const auto run = oracles::jc_discrete_mode_evolution(
                p, modes, jc::JCInitialState::from_population(1.0), 10.0 / p.lambda, 1e-3 / p.lambda, 10);
            for (std::size_t i = 0; i < run.times.size(); ++i) {
                worst = std::max(worst, std::abs(run.population[i] - forms.population(p, 1.0, run.times[i])));
            }
            worst_norm = std::max(worst_norm, run.norm_residual);
        } catch (const oracles::IntegrationError& e) {
            worst = std::numeric_limits<double>::infinity();
            worst_norm = std::max(worst_norm, e.norm_residual);
        }
        add(out, suite, fmt("discrete-modes-vs-closed K=%g", K), "AC6", worst, 1e-2);
    }
    const double elapsed = seconds_since(start);
    add(out, suite, "discrete-modes-norm-residual", "AC6", worst_norm, 1e-8, elapsed);
    add(out, suite, "discrete-modes-runtime-s", "AC6", elapsed, 60.0, elapsed);
    return out;
}

Results jc_entropy_suite(const ClosedForms& forms) {
    constexpr std::string_view suite = "jc-entropy";
    Results out;
    auto start = Clock::now();
    double pop_err = 0.0, entropy_err = 0.0;
    for (double K : {0.2, 1.0, 5.0}) {
        const auto p = jc::JCParams::from_K(K);
        const auto t_m = jc::max_entropy_time(p, 1.0);
        if (!t_m) {
            pop_err = entropy_err = std::numeric_limits<double>::infinity();
            continue;
        }
        const double pop = forms.population(p, 1.0, *t_m);
        pop_err = std::max(pop_err, std::abs(pop - 0.5));
        const double v = jc::bloch_modulus_jc(1.0, std::clamp(pop, 0.0, 1.0));
        entropy_err = std::max(entropy_err, std::abs(entropy_from_modulus(v) - std::numbers::ln2));
    }
    add(out, suite, "max-entropy-time-population", "AC7", pop_err, 1e-10, seconds_since(start));
    add(out, suite, "max-entropy-time-entropy", "AC7", entropy_err, 1e-9, seconds_since(start));

    start = Clock::now();
    const double c0 = 0.8;
    const double expected = eigenvalue_entropy(std::sqrt(1.0 - c0 * c0));
    double peak_err = 0.0, gap_shortfall = -1.0, spurious = 0.0;
    for (double K : {0.2, 1.0, 5.0}) {
        const auto p = jc::JCParams::from_K(K);
        double peak = 0.0;
        for (double t : uniform_grid(10.0 / p.lambda, 10000)) {
            const double pop = std::clamp(forms.population(p, c0, t), 0.0, c0);
            peak = std::max(peak, entropy_from_modulus(jc::bloch_modulus_jc(c0, pop)));
        }
        peak_err = std::max(peak_err, std::abs(peak - expected));
        gap_shortfall = std::max(gap_shortfall, 0.19 - (std::numbers::ln2 - peak));
        if (jc::max_entropy_time(p, c0)) spurious = 1.0;
    }
    const double elapsed = seconds_since(start);
    add(out, suite, "submaximal-peak-entropy", "AC8", peak_err, 1e-6, elapsed);
    add(out, suite, "submaximal-gap-below-ln2", "AC8", gap_shortfall, 0.0, elapsed);
    add(out, suite, "submaximal-no-max-entropy-time", "AC8", spurious, 0.0, elapsed);
    return out;
}

using SuiteFn = Results (*)(const ClosedForms&);

struct Suite {
    std::string name;
    SuiteFn fn;
    std::vector<std::string> criteria;  // labels to fail if the suite throws
};

const std::vector<Suite>& registry() {
    static const std::vector<Suite> suites = {
        {"qubit-core", qubit_core_suite, {"AC10"}},
        {"dephasing-quadrature", dephasing_quadrature_suite, {"AC1"}},
        {"dephasing-limits", dephasing_limits_suite, {"AC2", "AC3", "AC4"}},
        {"dephasing-exact", dephasing_exact_suite, {""}},
        {"schmidt", schmidt_suite, {"AC9"}},
        {"jc-volterra", jc_volterra_suite, {"AC5"}},
        {"jc-discrete", jc_discrete_suite, {"AC6"}},
        {"jc-entropy", jc_entropy_suite, {"AC7", "AC8"}},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& s : registry()) n.push_back(s.name);
        return n;
    }();
    return names;
}

std::vector<CheckResult> run(std::string_view suite, const ClosedForms& forms) {
    std::vector<const Suite*> selected;
    for (const auto& s : registry()) {
        if (suite.empty() || suite == "all" || suite == s.name) selected.push_back(&s);
    }
    if (selected.empty()) throw std::invalid_argument("unknown verification suite: " + std::string(suite));

    std::vector<std::future<Results>> pending;
    pending.reserve(selected.size());
    for (const Suite* s : selected) {
        pending.push_back(std::async(std::launch::async, [s, &forms] {
            try {
                return s->fn(forms);
            } catch (const std::exception& e) {
                Results failed;
                for (const auto& label : s->criteria) {
                    add(failed, s->name, std::string("exception: ") + e.what(), label,
                        std::numeric_limits<double>::infinity(), 0.0);
                }
                return failed;
            }
        }));
    }
    std::vector<CheckResult> all;
    for (auto& f : pending) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string format_line(const CheckResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-5s %-22s %-44s max_err=%.3e tol=%.3e %s",
                  r.criterion.empty() ? "-" : r.criterion.c_str(), r.suite.c_str(), r.name.c_str(),
                  r.max_error, r.tolerance, r.passed ? "PASS" : "FAIL");
    return buf;
}

}  // namespace qent::verify

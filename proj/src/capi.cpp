#include "qent/qent.h"

#include <cmath>
#include <algorithm>
#include <exception>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qent/dephasing.hpp"
#include "qent/jaynes_cummings.hpp"
#include "qent/oracles/fock.hpp"
#include "qent/oracles/jc_modes.hpp"
#include "qent/oracles/quadrature.hpp"
#include "qent/oracles/volterra.hpp"
#include "qent/qubit.hpp"
#include "qent/trajectory.hpp"
#include "qent/verify.hpp"

struct qent_trajectory {
    qent::Trajectory traj;
};

struct qent_report {
    std::vector<qent::verify::CheckResult> checks;
};

namespace {

thread_local std::string g_last_error;

qent_status fail(qent_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Maps exceptions escaping the C++ core onto status codes.
template <typename Fn>
qent_status guarded(Fn&& fn) noexcept {
    try {
        g_last_error.clear();
        fn();
        return QENT_OK;
    } catch (const std::domain_error& e) {
        return fail(QENT_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QENT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const qent::oracles::ConvergenceError& e) {
        return fail(QENT_ERR_CONVERGENCE, e.what());
    } catch (const qent::oracles::InstabilityError& e) {
        return fail(QENT_ERR_CONVERGENCE, e.what());
    } catch (const qent::oracles::IntegrationError& e) {
        return fail(QENT_ERR_CONVERGENCE, e.what());
    } catch (const qent::oracles::TruncationError& e) {
        return fail(QENT_ERR_CONVERGENCE, e.what());
    } catch (const std::exception& e) {
        return fail(QENT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QENT_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* ptr, const char* what) {
    if (ptr == nullptr) throw std::invalid_argument(std::string(what) + " is NULL");
}

qent::dephasing::OhmicSpectralDensity make_sd(double s, double coupling, double cutoff) {
    qent::dephasing::OhmicSpectralDensity sd{s, coupling, cutoff};
    sd.validate();
    return sd;
}

qent::jc::JCParams make_jc(double gamma0, double lambda, double omega0 = 0.0) {
    qent::jc::JCParams p{gamma0, lambda, omega0};
    p.validate();
    return p;
}

// Closed form with the sign of the (lambda / Lambda) sinh term flipped.
double corrupted_population(const qent::jc::JCParams& p, double c0, double t) {
    const double half = 0.5 * p.lambda * t;
    const double d = p.discriminant();
    double root;
    if (d >= 0.0) {
        const double x = std::sqrt(d) * half;
        root = std::cosh(x) - (x > 0.0 ? half * std::sinh(x) / x : half);
    } else {
        const double y = std::sqrt(-d) * half;
        root = std::cos(y) - half * std::sin(y) / y;
    }
    return c0 * std::exp(-p.lambda * t) * root * root;
}

}  // namespace

extern "C" {

const char* qent_version(void) { return "1.0.0"; }

int qent_api_version(void) { return QENT_API_VERSION; }

const char* qent_last_error(void) { return g_last_error.c_str(); }

const char* qent_status_string(qent_status status) {
    switch (status) {
        case QENT_OK: return "ok";
        case QENT_ERR_DOMAIN: return "domain error";
        case QENT_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QENT_ERR_CONVERGENCE: return "convergence failure";
        case QENT_ERR_NOT_FOUND: return "not found";
        case QENT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

qent_status qent_bloch_modulus(double v_plus_re, double v_plus_im, double v3, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::bloch_modulus({qent::complex{v_plus_re, v_plus_im}, v3});
    });
}

qent_status qent_entropy_from_modulus(double v, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::entropy_from_modulus(v);
    });
}

qent_status qent_schmidt_weights(double v, double* w0, double* w1) {
    return guarded([&] {
        require(w0, "w0");
        require(w1, "w1");
        const auto w = qent::schmidt_weights_from_modulus(v);
        *w0 = w.w0;
        *w1 = w.w1;
    });
}

qent_status qent_spectral_density(double s, double coupling, double cutoff, double omega,
                                  double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::dephasing::spectral_density_eval(make_sd(s, coupling, cutoff), omega);
    });
}

qent_status qent_gamma_vac(double s, double coupling, double cutoff, double t, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::dephasing::gamma_vac_closed(make_sd(s, coupling, cutoff), t);
    });
}

qent_status qent_gamma_vac_infinity(double s, double coupling, double cutoff, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::dephasing::gamma_vac_infinity(make_sd(s, coupling, cutoff));
    });
}

qent_status qent_entropy_limit_dephasing(double s, double coupling, double cutoff, double v3,
                                         double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::dephasing::entropy_limit_dephasing(make_sd(s, coupling, cutoff), v3);
    });
}

qent_status qent_gamma_vac_quadrature(double s, double coupling, double cutoff, double t, double tol,
                                      double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::oracles::quad_gamma_vac(make_sd(s, coupling, cutoff), t, tol);
    });
}

qent_status qent_dephasing_trajectory_new(const qent_dephasing_params* params, const double* times,
                                          size_t n_times, qent_trajectory** out) {
    return guarded([&] {
        require(params, "params");
        require(times, "times");
        require(out, "out");
        const auto sd = make_sd(params->s, params->coupling, params->cutoff);
        const qent::dephasing::DephasingInitialState init{{params->a0_re, params->a0_im},
                                                          {params->a1_re, params->a1_im}};
        auto handle = std::make_unique<qent_trajectory>();
        handle->traj = qent::dephasing::dephasing_trajectory(sd, init, params->omega0,
                                                             std::span(times, n_times));
        *out = handle.release();
    });
}

qent_status qent_jc_population(double gamma0, double lambda, double c1_0_sq, double t, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = qent::jc::population_c1_sq(make_jc(gamma0, lambda), c1_0_sq, t);
    });
}

qent_status qent_jc_max_entropy_time(double gamma0, double lambda, double c1_0_sq, double* out) {
    qent_status status = QENT_OK;
    const qent_status guard = guarded([&] {
        require(out, "out");
        const auto t_m = qent::jc::max_entropy_time(make_jc(gamma0, lambda), c1_0_sq);
        if (t_m) {
            *out = *t_m;
        } else {
            status = fail(QENT_ERR_NOT_FOUND,
                          "maximum entropy is only reached for a fully excited initial state");
        }
    });
    return guard != QENT_OK ? guard : status;
}

qent_status qent_jc_trajectory_new(const qent_jc_params* params, const double* times, size_t n_times,
                                   qent_trajectory** out) {
    return guarded([&] {
        require(params, "params");
        require(times, "times");
        require(out, "out");
        const auto p = make_jc(params->gamma0, params->lambda, params->omega0);
        const qent::jc::JCInitialState init{{params->a0_re, params->a0_im},
                                            {params->c1_re, params->c1_im}};
        auto handle = std::make_unique<qent_trajectory>();
        handle->traj = qent::jc::jc_trajectory(p, init, std::span(times, n_times));
        *out = handle.release();
    });
}

qent_status qent_jc_population_volterra(double gamma0, double lambda, double c1_0_sq,
                                        const double* times, size_t n_times, double max_step,
                                        double* out) {
    return guarded([&] {
        require(times, "times");
        require(out, "out");
        const auto p = make_jc(gamma0, lambda);
        const auto init = qent::jc::JCInitialState::from_population(c1_0_sq);
        qent::validate_time_grid(std::span(times, n_times));
        if (!(max_step > 0.0)) throw std::invalid_argument("max_step must be > 0");
        if (times[n_times - 1] == 0.0) {
            for (size_t i = 0; i < n_times; ++i) out[i] = c1_0_sq;
            return;
        }
        // Largest step <= max_step dividing the first nonzero grid spacing.
        const double spacing = times[0] == 0.0 ? times[1] : times[0];
        const double step = spacing / std::ceil(spacing / max_step);
        const auto curve =
            qent::oracles::volterra_solve_c1(p, init.c1_0, times[n_times - 1], step);
        std::vector<double> sampled(n_times);
        for (size_t i = 0; i < n_times; ++i) {
            const double idx = std::round(times[i] / step);
            if (std::abs(idx * step - times[i]) > 1e-9 * std::max(1.0, times[i]) ||
                static_cast<size_t>(idx) >= curve.size()) {
                throw std::invalid_argument("time grid is not commensurate with the solver step");
            }
            sampled[i] = curve.population(static_cast<size_t>(idx));
        }
        std::copy(sampled.begin(), sampled.end(), out);
    });
}

size_t qent_trajectory_size(const qent_trajectory* traj) {
    return traj == nullptr ? 0 : traj->traj.size();
}

qent_status qent_trajectory_record(const qent_trajectory* traj, size_t index, qent_record* out) {
    return guarded([&] {
        require(traj, "trajectory");
        require(out, "out");
        if (index >= traj->traj.size()) throw std::invalid_argument("record index out of range");
        const auto& r = traj->traj.records[index];
        *out = {r.t, r.primary, r.v, r.entropy, r.bloch.v_plus.real(), r.bloch.v_plus.imag(),
                r.bloch.v3};
    });
}

void qent_trajectory_free(qent_trajectory* traj) { delete traj; }

size_t qent_verify_suite_count(void) { return qent::verify::suite_names().size(); }

const char* qent_verify_suite_name(size_t index) {
    const auto& names = qent::verify::suite_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

qent_status qent_verify_run(const char* suite, qent_fault fault, qent_report** out) {
    return guarded([&] {
        require(out, "out");
        qent::verify::ClosedForms forms;
        switch (fault) {
            case QENT_FAULT_NONE: break;
            case QENT_FAULT_GAMMA_SIGN:
                forms.gamma_vac = [](const qent::dephasing::OhmicSpectralDensity& sd, double t) {
                    return -qent::dephasing::gamma_vac_closed(sd, t);
                };
                break;
            case QENT_FAULT_POPULATION_SIGN: forms.population = corrupted_population; break;
            default: throw std::invalid_argument("unknown fault selector");
        }
        auto report = std::make_unique<qent_report>();
        report->checks = qent::verify::run(suite == nullptr ? "all" : suite, forms);
        *out = report.release();
    });
}

size_t qent_report_size(const qent_report* report) {
    return report == nullptr ? 0 : report->checks.size();
}

qent_status qent_report_check(const qent_report* report, size_t index, qent_check* out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        if (index >= report->checks.size()) throw std::invalid_argument("check index out of range");
        const auto& c = report->checks[index];
        *out = {c.suite.c_str(), c.name.c_str(), c.criterion.c_str(), c.max_error, c.tolerance,
                c.seconds, c.passed ? 1 : 0};
    });
}

int qent_report_all_passed(const qent_report* report) {
    return report != nullptr && qent::verify::all_passed(report->checks) ? 1 : 0;
}

void qent_report_free(qent_report* report) { delete report; }

}  // extern "C"

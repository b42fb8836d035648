// Command-line front end: trajectory CSVs for the dephasing and
// Jaynes-Cummings models, figure data presets, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 I/O error.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csv_output.hpp"
#include "qent/qent.h"

namespace {

using qent_cli::IoError;
using qent_cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(qent_status status) {
    if (status == QENT_OK) return;
    const std::string msg = std::string(qent_status_string(status)) + ": " + qent_last_error();
    if (status == QENT_ERR_DOMAIN || status == QENT_ERR_INVALID_ARGUMENT) throw UsageError(msg);
    throw std::runtime_error(msg);
}

struct TrajectoryDeleter {
    void operator()(qent_trajectory* t) const { qent_trajectory_free(t); }
};
using TrajectoryPtr = std::unique_ptr<qent_trajectory, TrajectoryDeleter>;

struct ReportDeleter {
    void operator()(qent_report* r) const { qent_report_free(r); }
};
using ReportPtr = std::unique_ptr<qent_report, ReportDeleter>;

std::vector<double> uniform_times(double t_max, int points) {
    if (points < 2) throw UsageError("--points must be >= 2");
    std::vector<double> t(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) t[i] = t_max * static_cast<double>(i) / (points - 1);
    return t;
}

// Shortest text that reads back as the same double.
std::string num(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

// ------------------------------------------------------------------ configs

struct GridConfig {
    double t_max{20.0};
    int points{400};
    std::string out{"-"};
    bool oracle{false};
    bool bits{false};
};

struct DephasingConfig {
    double s{1.0};
    double coupling{0.25};
    std::optional<double> v3;
    std::optional<double> a0_sq;
    double omega0{0.0};
    double oracle_tol{1e-12};
    GridConfig grid;

    double resolved_v3() const {
        if (a0_sq) {
            if (!(*a0_sq >= 0.0 && *a0_sq <= 1.0)) throw UsageError("--a0-sq must lie in [0, 1]");
            return 1.0 - 2.0 * *a0_sq;
        }
        return v3.value_or(0.0);
    }
};

struct JcConfig {
    std::optional<double> K;
    std::optional<double> gamma0;
    std::optional<double> lambda;
    double c1sq0{1.0};
    double omega0{0.0};
    double oracle_step{1e-3};
    GridConfig grid;

    double resolved_K() const {
        if (K && (gamma0 || lambda)) throw UsageError("give either --K or --gamma0 with --lambda");
        if (K) return *K;
        if (gamma0 && lambda) {
            if (!(*lambda > 0.0)) throw UsageError("--lambda must be > 0");
            return 2.0 * *gamma0 / *lambda;
        }
        if (gamma0 || lambda) throw UsageError("--gamma0 and --lambda must be given together");
        return 1.0;
    }
};

double entropy_unit(bool bits) { return bits ? std::numbers::ln2 : 1.0; }

// Time is measured in units of 1/cutoff, so the cutoff is fixed to 1.
Table dephasing_table(const DephasingConfig& cfg) {
    const double v3 = cfg.resolved_v3();
    if (!(std::abs(v3) <= 1.0)) throw UsageError("--v3 must lie in [-1, 1]");
    const auto times = uniform_times(cfg.grid.t_max, cfg.grid.points);

    qent_dephasing_params params{};
    params.s = cfg.s;
    params.coupling = cfg.coupling;
    params.cutoff = 1.0;
    params.omega0 = cfg.omega0;
    params.a0_re = std::sqrt(0.5 * (1.0 - v3));
    params.a1_re = std::sqrt(0.5 * (1.0 + v3));

    qent_trajectory* raw = nullptr;
    check(qent_dephasing_trajectory_new(&params, times.data(), times.size(), &raw));
    TrajectoryPtr traj(raw);

    Table table;
    table.header = {"t", "gamma", "v", "entropy"};
    if (cfg.grid.oracle) {
        table.header.push_back("gamma_quad");
        table.header.push_back("entropy_quad");
    }
    const double unit = entropy_unit(cfg.grid.bits);
    for (std::size_t i = 0; i < qent_trajectory_size(traj.get()); ++i) {
        qent_record r{};
        check(qent_trajectory_record(traj.get(), i, &r));
        std::vector<double> row{r.t, r.primary, r.v, r.entropy / unit};
        if (cfg.grid.oracle) {
            double gq = 0.0, vq = 0.0, sq = 0.0;
            check(qent_gamma_vac_quadrature(cfg.s, cfg.coupling, 1.0, r.t, cfg.oracle_tol, &gq));
            vq = std::sqrt(v3 * v3 + (1.0 - v3 * v3) * std::exp(-2.0 * gq));
            check(qent_entropy_from_modulus(std::min(vq, 1.0), &sq));
            row.push_back(gq);
            row.push_back(sq / unit);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Time is measured in units of 1/lambda, so lambda is fixed to 1 and gamma0 = K/2.
Table jc_table(const JcConfig& cfg) {
    const double K = cfg.resolved_K();
    if (!(cfg.c1sq0 >= 0.0 && cfg.c1sq0 <= 1.0)) throw UsageError("--c1sq0 must lie in [0, 1]");
    const auto times = uniform_times(cfg.grid.t_max, cfg.grid.points);

    qent_jc_params params{};
    params.gamma0 = 0.5 * K;
    params.lambda = 1.0;
    params.omega0 = cfg.omega0;
    params.a0_re = std::sqrt(1.0 - cfg.c1sq0);
    params.c1_re = std::sqrt(cfg.c1sq0);

    qent_trajectory* raw = nullptr;
    check(qent_jc_trajectory_new(&params, times.data(), times.size(), &raw));
    TrajectoryPtr traj(raw);

    std::vector<double> volterra;
    if (cfg.grid.oracle) {
        volterra.resize(times.size());
        check(qent_jc_population_volterra(params.gamma0, params.lambda, cfg.c1sq0, times.data(),
                                          times.size(), cfg.oracle_step, volterra.data()));
    }

    Table table;
    table.header = {"t", "c1sq", "v", "entropy"};
    if (cfg.grid.oracle) {
        table.header.push_back("c1sq_volterra");
        table.header.push_back("entropy_volterra");
    }
    const double unit = entropy_unit(cfg.grid.bits);
    for (std::size_t i = 0; i < qent_trajectory_size(traj.get()); ++i) {
        qent_record r{};
        check(qent_trajectory_record(traj.get(), i, &r));
        std::vector<double> row{r.t, r.primary, r.v, r.entropy / unit};
        if (cfg.grid.oracle) {
            const double pop = std::clamp(volterra[i], 0.0, cfg.c1sq0);
            const double v2 = 1.0 - 4.0 * pop * (cfg.c1sq0 - pop);
            double s = 0.0;
            check(qent_entropy_from_modulus(std::min(1.0, std::sqrt(std::max(v2, 0.0))), &s));
            row.push_back(volterra[i]);
            row.push_back(s / unit);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// ------------------------------------------------------------------ figures

// Representative parameter sets; the figures' own values are not tabulated.
int run_figures(const std::string& preset, const std::string& out_dir, int points, bool bits) {
    std::vector<std::pair<std::string, std::string>> manifest{{"preset", preset}};
    std::vector<std::pair<std::string, Table>> curves;

    auto add_common = [&](const std::string& prefix, const GridConfig& g) {
        manifest.emplace_back(prefix + ".t_max", num(g.t_max));
        manifest.emplace_back(prefix + ".points", std::to_string(g.points));
        manifest.emplace_back(prefix + ".bits", g.bits ? "true" : "false");
    };

    if (preset == "fig1") {
        for (double s : {0.5, 1.0, 3.0}) {
            for (double coupling : {0.1, 0.25, 1.0}) {
                DephasingConfig cfg;
                cfg.s = s;
                cfg.coupling = coupling;
                cfg.v3 = 0.0;
                cfg.grid.points = points;
                cfg.grid.bits = bits;
                const std::string file = "fig1_s" + num(s) + "_coupling" + num(coupling) + ".csv";
                const std::string prefix = "curve." + std::to_string(curves.size());
                manifest.emplace_back(prefix + ".file", file);
                manifest.emplace_back(prefix + ".model", "dephasing");
                manifest.emplace_back(prefix + ".s", num(s));
                manifest.emplace_back(prefix + ".coupling", num(coupling));
                manifest.emplace_back(prefix + ".v3", "0");
                add_common(prefix, cfg.grid);
                curves.emplace_back(file, dephasing_table(cfg));
            }
        }
    } else if (preset == "fig2" || preset == "fig3") {
        std::vector<std::pair<double, double>> sets;  // (K, c1sq0)
        if (preset == "fig2") {
            for (double K : {0.2, 0.6, 1.0, 2.0, 5.0, 20.0}) sets.emplace_back(K, 1.0);
        } else {
            for (double K : {0.2, 5.0}) {
                for (double c : {1.0, 0.8, 0.5}) sets.emplace_back(K, c);
            }
        }
        for (const auto& [K, c] : sets) {
            JcConfig cfg;
            cfg.K = K;
            cfg.c1sq0 = c;
            cfg.grid.points = points;
            cfg.grid.bits = bits;
            const std::string file = preset + "_K" + num(K) + "_c1sq0" + num(c) + ".csv";
            const std::string prefix = "curve." + std::to_string(curves.size());
            manifest.emplace_back(prefix + ".file", file);
            manifest.emplace_back(prefix + ".model", "jc");
            manifest.emplace_back(prefix + ".panel", K < 1.0 ? "weak" : (K == 1.0 ? "critical" : "strong"));
            manifest.emplace_back(prefix + ".K", num(K));
            manifest.emplace_back(prefix + ".c1sq0", num(c));
            add_common(prefix, cfg.grid);
            curves.emplace_back(file, jc_table(cfg));
        }
    } else {
        throw UsageError("unknown preset '" + preset + "' (expected fig1, fig2 or fig3)");
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
    const std::filesystem::path dir(out_dir);
    for (const auto& [file, table] : curves) {
        qent_cli::write_atomically((dir / file).string(), qent_cli::render_csv(table));
    }
    qent_cli::write_atomically((dir / (preset + "_manifest.txt")).string(),
                               qent_cli::render_manifest(manifest));
    std::cerr << "wrote " << curves.size() << " curves to " << out_dir << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& suite, const std::string& fault_name, bool list) {
    if (list) {
        for (std::size_t i = 0; i < qent_verify_suite_count(); ++i) {
            std::cout << qent_verify_suite_name(i) << "\n";
        }
        return kExitOk;
    }
    qent_fault fault = QENT_FAULT_NONE;
    if (fault_name == "gamma-sign") {
        fault = QENT_FAULT_GAMMA_SIGN;
    } else if (fault_name == "population-sign") {
        fault = QENT_FAULT_POPULATION_SIGN;
    } else if (fault_name != "none") {
        throw UsageError("unknown fault '" + fault_name + "'");
    }

    qent_report* raw = nullptr;
    check(qent_verify_run(suite.c_str(), fault, &raw));
    ReportPtr report(raw);
    std::size_t failed = 0;
    for (std::size_t i = 0; i < qent_report_size(report.get()); ++i) {
        qent_check c{};
        check(qent_report_check(report.get(), i, &c));
        if (!c.passed) ++failed;
        std::printf("%-5s %-22s %-44s max_err=%.3e tol=%.3e %s\n",
                    c.criterion[0] ? c.criterion : "-", c.suite, c.name, c.max_error, c.tolerance,
                    c.passed ? "PASS" : "FAIL");
    }
    std::printf("%zu checks, %zu failed\n", qent_report_size(report.get()), failed);
    std::fflush(stdout);
    return qent_report_all_passed(report.get()) ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------ config files

// Flat key=value lines become --key=value arguments placed right after the
// subcommand, ahead of the real command line so that later flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<std::string> config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file");
            config_path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i + 2));
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (!config_path) return args;

    std::ifstream in(*config_path);
    if (!in) throw IoError("cannot read config file " + *config_path);
    std::vector<std::string> injected;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(*config_path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        injected.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
    }
    const auto sub = std::find_if(args.begin(), args.end(),
                                  [](const std::string& a) { return a.empty() || a[0] != '-'; });
    const auto pos = sub == args.end() ? args.end() : sub + 1;
    args.insert(pos, injected.begin(), injected.end());
    return args;
}

void add_grid_options(CLI::App* cmd, GridConfig& g, const char* time_unit) {
    cmd->add_option("--t-max", g.t_max, std::string("end of the time grid in units of ") + time_unit)
        ->capture_default_str();
    cmd->add_option("--points", g.points, "number of grid points (>= 2)")->capture_default_str();
    cmd->add_option("--out", g.out, "output CSV path, '-' for stdout")->capture_default_str();
    cmd->add_flag("--oracle", g.oracle, "append columns computed by the independent oracle");
    cmd->add_flag("--bits", g.bits, "report entropy in bits instead of nats");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact qubit entropy dynamics in the dephasing and damped Jaynes-Cummings models",
                 "qent"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qent_version()));

    DephasingConfig dcfg;
    auto* deph = app.add_subcommand("dephasing", "spin-boson dephasing trajectory (t in units of 1/cutoff)");
    deph->add_option("--s", dcfg.s, "Ohmicity exponent s > 0")->capture_default_str();
    deph->add_option("--coupling", dcfg.coupling, "dimensionless coupling lambda_s")->capture_default_str();
    auto* v3_opt = deph->add_option("--v3", dcfg.v3, "initial population difference (default 0)");
    deph->add_option("--a0-sq", dcfg.a0_sq, "initial ground-state population |a0|^2")->excludes(v3_opt);
    deph->add_option("--omega0", dcfg.omega0, "qubit splitting (phase only)")->capture_default_str();
    deph->add_option("--oracle-tol", dcfg.oracle_tol, "absolute tolerance of the quadrature oracle")
        ->capture_default_str();
    add_grid_options(deph, dcfg.grid, "1/cutoff");

    JcConfig jcfg;
    auto* jc = app.add_subcommand("jc", "damped Jaynes-Cummings trajectory (t in units of 1/lambda)");
    auto* k_opt = jc->add_option("--K", jcfg.K, "coupling K = 2 gamma0 / lambda (default 1)");
    jc->add_option("--gamma0", jcfg.gamma0, "Markovian decay rate (with --lambda)")->excludes(k_opt);
    jc->add_option("--lambda", jcfg.lambda, "spectral width (with --gamma0)")->excludes(k_opt);
    jc->add_option("--c1sq0", jcfg.c1sq0, "initial excited-state population")->capture_default_str();
    jc->add_option("--omega0", jcfg.omega0, "transition frequency (phase only)")->capture_default_str();
    jc->add_option("--oracle-step", jcfg.oracle_step, "largest Volterra step in units of 1/lambda")
        ->capture_default_str();
    add_grid_options(jc, jcfg.grid, "1/lambda");

    std::string preset;
    std::string fig_dir = "figures";
    int fig_points = 400;
    bool fig_bits = false;
    auto* figs = app.add_subcommand("figures", "emit the CSV curves of a figure preset plus a manifest");
    figs->add_option("preset", preset, "fig1, fig2 or fig3")->required();
    figs->add_option("--out-dir", fig_dir, "output directory")->capture_default_str();
    figs->add_option("--points", fig_points, "grid points per curve")->capture_default_str();
    figs->add_flag("--bits", fig_bits, "report entropy in bits");

    std::string suite = "all";
    std::string fault = "none";
    bool list_suites = false;
    auto* ver = app.add_subcommand("verify", "run the oracle-versus-closed-form checks");
    ver->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
    ver->add_flag("--list", list_suites, "list suite names and exit");
    ver->add_option("--inject-fault", fault,
                    "negative control: none, gamma-sign or population-sign")
        ->capture_default_str();

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    try {
        if (deph->parsed()) {
            qent_cli::write_atomically(dcfg.grid.out, qent_cli::render_csv(dephasing_table(dcfg)));
        } else if (jc->parsed()) {
            qent_cli::write_atomically(jcfg.grid.out, qent_cli::render_csv(jc_table(jcfg)));
        } else if (figs->parsed()) {
            return run_figures(preset, fig_dir, fig_points, fig_bits);
        } else if (ver->parsed()) {
            return run_verify(suite, fault, list_suites);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

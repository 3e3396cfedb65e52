// Copyright 2026 the srsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srs/config.hpp"
#include "srs/dof.hpp"
#include "srs/formulas.hpp"
#include "srs/precoder.hpp"
#include "srs/results.hpp"
#include "srs/svg.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::string out_path;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "configuration file (key = value sections)");
    cmd->add_option("--seed", args.seed, "override the scenario seed");
    cmd->add_option("--trials", args.trials, "override the scenario trial count");
    cmd->add_option("--out", args.out_path, "output file path");
}

srs::ConfigFile load_config(const CommonArgs& args) {
    if (args.config_path.empty()) return srs::ConfigFile::parse_string("");
    return srs::ConfigFile::parse_file(args.config_path);
}

srs::ScenarioConfig scenario_with_overrides(const srs::ConfigFile& file, const CommonArgs& args) {
    srs::ScenarioConfig cfg = srs::scenario_from_config(file);
    if (args.seed) cfg.seed = *args.seed;
    if (args.trials) cfg.trials = *args.trials;
    cfg.validate();
    return cfg;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// ---------------------------------------------------------------- formulas

int run_formulas(const CommonArgs& args, std::string preset, int rx, int tx_min, int tx_max,
                 std::vector<double> alphas) {
    const auto file = load_config(args);
    if (preset.empty()) preset = file.get_string("formulas", "preset", "grid");
    rx = static_cast<int>(file.get_int("formulas", "rx_antennas", rx));
    tx_min = static_cast<int>(file.get_int("formulas", "tx_min", tx_min));
    tx_max = static_cast<int>(file.get_int("formulas", "tx_max", tx_max));
    if (alphas.empty()) alphas = file.get_double_list("formulas", "alpha_grid", {});
    if (alphas.empty()) {
        alphas = preset == "fig3" ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}
                                  : std::vector<double>{0.0, 0.5, 1.0};
    }

    std::vector<srs::ExperimentResultRow> rows;
    if (preset == "fig2") {
        // Scheme-vs-baseline curves over M/N in {0.5, 1, 1.5, 2, 2.5, 3}, N = 2.
        const int N = 2;
        for (const char* scheme : {"srs", "zf"}) {
            for (double alpha : alphas) {
                for (int M = 1; M <= 6; ++M) {
                    srs::ExperimentResultRow r;
                    r.scheme = scheme;
                    r.M = M;
                    r.N = N;
                    r.J = 2 * N;
                    r.alpha = alpha;
                    r.formula = std::string(scheme) == "srs" ? srs::srs_sum_sdof(M, N, alpha)
                                                             : srs::zf_sum_sdof(M, N, alpha);
                    rows.push_back(r);
                }
            }
        }
    } else if (preset == "fig3") {
        // K-user lower bound over K in 1..6, N = 2, M = K*N.
        const int N = 2;
        for (double alpha : alphas) {
            for (int K = 1; K <= 6; ++K) {
                srs::ExperimentResultRow r;
                r.scheme = "kuser";
                r.M = K * N;
                r.N = N;
                r.J = 2 * N;
                r.K = K;
                r.alpha = alpha;
                r.formula = srs::multiuser_sum_sdof(K, N, alpha, K * N);
                rows.push_back(r);
            }
        }
    } else if (preset == "grid") {
        if (tx_min < 1 || tx_max < tx_min) throw std::invalid_argument("bad tx antenna range");
        for (const char* scheme : {"srs", "zf"}) {
            for (int M = tx_min; M <= tx_max; ++M) {
                for (double alpha : alphas) {
                    srs::ExperimentResultRow r;
                    r.scheme = scheme;
                    r.M = M;
                    r.N = rx;
                    r.J = 2 * rx;
                    r.alpha = alpha;
                    r.formula = std::string(scheme) == "srs" ? srs::srs_sum_sdof(M, rx, alpha)
                                                             : srs::zf_sum_sdof(M, rx, alpha);
                    rows.push_back(r);
                }
            }
        }
    } else {
        throw std::invalid_argument("unknown preset '" + preset + "' (fig2, fig3, grid)");
    }

    std::printf("%-6s %3s %3s %4s %6s %10s\n", "scheme", "M", "N", "K", "alpha", "formula");
    for (const auto& r : rows) {
        std::printf("%-6s %3d %3d %4s %6s %10s\n", r.scheme.c_str(), r.M, r.N,
                    r.K ? std::to_string(*r.K).c_str() : "-", fmt(r.alpha).c_str(),
                    fmt(r.formula).c_str());
    }
    if (!args.out_path.empty()) {
        srs::write_results_csv(args.out_path, rows);
        std::printf("wrote %zu rows to %s\n", rows.size(), args.out_path.c_str());
    }
    return 0;
}

// ---------------------------------------------------------------- simulate

int run_simulate(const CommonArgs& args, int threads, std::optional<double> tolerance_flag) {
    const auto file = load_config(args);
    const srs::ScenarioConfig base = scenario_with_overrides(file, args);

    const auto tx_grid = file.get_int_list("simulate", "tx_antenna_grid", {base.tx_antennas});
    const auto alpha_grid = file.get_double_list("simulate", "alpha_grid", {base.csit_quality});
    const auto scheme_names =
        file.get_string_list("simulate", "schemes", {"srs", "zf"});
    const double tolerance =
        tolerance_flag ? *tolerance_flag : file.get_double("simulate", "tolerance", 0.15);

    std::vector<srs::Scheme> schemes;
    for (const auto& name : scheme_names) {
        if (name == "srs") {
            schemes.push_back(srs::Scheme::SRS);
        } else if (name == "zf") {
            schemes.push_back(srs::Scheme::ZF);
        } else {
            throw std::invalid_argument("config [simulate] schemes: unknown scheme '" + name +
                                        "'");
        }
    }

    srs::EstimateOptions options;
    options.threads = threads;

    const auto table = srs::sweep(base, tx_grid, alpha_grid, schemes, options);

    std::vector<srs::ExperimentResultRow> rows;
    int within = 0;
    std::printf("%-6s %3s %3s %6s %10s %10s %10s %8s  %s\n", "scheme", "M", "N", "alpha",
                "formula", "slope", "leak", "stderr", "status");
    for (const auto& cell : table) {
        const auto& est = cell.estimate;
        const bool ok = std::abs(est.sum_sdof_slope - cell.formula_value) <= tolerance;
        within += ok ? 1 : 0;
        std::printf("%-6s %3d %3d %6s %10s %10s %10s %8s  %s\n",
                    srs::scheme_name(cell.cell.scheme), cell.cell.tx_antennas, cell.rx_antennas,
                    fmt(cell.cell.alpha).c_str(), fmt(cell.formula_value).c_str(),
                    fmt(est.sum_sdof_slope).c_str(), fmt(est.leakage_slope).c_str(),
                    fmt(est.slope_stderr).c_str(), ok ? "pass" : "FAIL");

        srs::ExperimentResultRow r;
        r.scheme = srs::scheme_name(cell.cell.scheme);
        r.M = cell.cell.tx_antennas;
        r.N = cell.rx_antennas;
        r.J = cell.jammer_antennas;
        r.alpha = cell.cell.alpha;
        r.formula = cell.formula_value;
        r.slope = est.sum_sdof_slope;
        r.leak_slope = est.leakage_slope;
        r.stderr_slope = est.slope_stderr;
        r.trials = est.trials;
        r.seed = base.seed;
        rows.push_back(r);
    }
    std::printf("%d/%zu cells within tolerance %.3f\n", within, table.size(), tolerance);

    const std::string out = args.out_path.empty() ? "results.csv" : args.out_path;
    srs::write_results_csv(out, rows);
    std::printf("wrote %zu rows to %s\n", rows.size(), out.c_str());
    return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(const CommonArgs& args, int draws, int tx, int rx, int jammer,
               bool inject_fault) {
    const auto file = load_config(args);
    draws = static_cast<int>(file.get_int("verify", "draws", draws));
    if (args.trials) draws = *args.trials;

    struct RegimeCase {
        int M, N, J;
    };
    std::vector<RegimeCase> cases;
    if (tx > 0) {
        cases.push_back({tx, rx, jammer});
    } else {
        for (const auto& spec : file.get_string_list("verify", "configs",
                                                     {"2x2x4", "3x2x4", "4x2x4", "6x2x4"})) {
            int M = 0, N = 0, J = 0;
            if (std::sscanf(spec.c_str(), "%dx%dx%d", &M, &N, &J) != 3) {
                throw std::invalid_argument("config [verify] configs: expected MxNxJ, got '" +
                                            spec + "'");
            }
            cases.push_back({M, N, J});
        }
    }

    bool all_pass = true;
    for (const auto& rc : cases) {
        srs::ScenarioConfig cfg;
        cfg.tx_antennas = rc.M;
        cfg.rx_antennas = rc.N;
        cfg.jammer_antennas = rc.J;
        cfg.csit_quality = 0.5;
        cfg.snr_grid = srs::default_snr_grid();
        cfg.trials = draws;
        cfg.seed = args.seed.value_or(20260810);
        cfg.validate();

        double worst = 0.0;
        std::string worst_condition = "-";
        for (int t = 0; t < draws; ++t) {
            const auto real = srs::sample_realization(cfg, t);
            srs::Rng stream(srs::derive_seed(cfg.seed, {srs::kStreamCsit,
                                                        static_cast<std::uint64_t>(t)}));
            const auto csit = srs::split_csit(real, cfg.csit_quality, 1e8, stream);
            auto ps = srs::design_srs(csit, real);
            if (inject_fault && t == 0) {
                ps.Wc1.array() += srs::Complex(1e-2, 0.0);  // deliberate corruption
            }
            const auto report = srs::verify(ps, csit, real);
            if (report.max_residual > worst) {
                worst = report.max_residual;
                for (const auto& r : report.nulling_residuals) {
                    if (r.value == report.max_residual) worst_condition = r.condition;
                }
                for (const auto& r : report.alignment_residuals) {
                    if (r.value == report.max_residual) worst_condition = r.condition;
                }
            }
        }
        const bool ok = worst <= 1e-8;
        all_pass = all_pass && ok;
        std::printf("M=%d N=%d J=%d draws=%d max_residual=%.3e  %s", rc.M, rc.N, rc.J, draws,
                    worst, ok ? "pass" : "FAIL");
        if (!ok) std::printf("  (worst condition: %s)", worst_condition.c_str());
        std::printf("\n");
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- plot

int run_plot(const CommonArgs& args, std::string in_path, std::string out_path,
             std::string title) {
    const auto file = load_config(args);
    if (in_path.empty()) in_path = file.get_string("plot", "in");
    if (out_path.empty()) {
        out_path = !args.out_path.empty() ? args.out_path
                                          : file.get_string("plot", "out", "chart.svg");
    }
    if (title.empty()) title = file.get_string("plot", "title", "");

    const auto rows = srs::read_results_csv(in_path);
    if (rows.empty()) throw std::invalid_argument("plot: no data rows in '" + in_path + "'");

    const bool kuser_style =
        std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.K.has_value(); });

    srs::ChartSpec spec;
    spec.title = !title.empty() ? title
                 : kuser_style ? "Sum-SDoF lower bound vs number of receivers"
                               : "Sum-SDoF vs M/N";
    spec.y_label = "sum-SDoF";
    spec.x_label = kuser_style ? "receivers K" : "M/N";

    // One curve per (scheme, alpha); points sorted by the x coordinate.
    std::map<std::pair<std::string, double>, std::vector<std::pair<double, double>>> curves;
    for (const auto& r : rows) {
        const double x = kuser_style ? static_cast<double>(*r.K)
                                     : static_cast<double>(r.M) / static_cast<double>(r.N);
        const double y = r.slope ? *r.slope : r.formula;
        curves[{r.scheme, r.alpha}].emplace_back(x, y);
    }
    for (auto& [key, points] : curves) {
        std::sort(points.begin(), points.end());
        char label[96];
        std::snprintf(label, sizeof(label), "%s alpha=%g", key.first.c_str(), key.second);
        spec.series.push_back({label, points});
    }

    srs::write_line_chart(out_path, spec);
    std::printf("wrote %s (%zu curves)\n", out_path.c_str(), spec.series.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"srsim: secure rate-splitting simulator for the two-user MIMO broadcast "
                 "channel with a cooperative jammer"};
    app.require_subcommand(1);

    CommonArgs formulas_args;
    std::string preset;
    int rx = 2, tx_min = 1, tx_max = 8;
    std::vector<double> alphas;
    auto* formulas_cmd =
        app.add_subcommand("formulas", "evaluate the closed-form sum-SDoF expressions");
    add_common_options(formulas_cmd, formulas_args);
    formulas_cmd->add_option("--preset", preset, "fig2, fig3, or grid");
    formulas_cmd->add_option("--rx", rx, "receive antennas per user (grid preset)");
    formulas_cmd->add_option("--tx-min", tx_min, "smallest transmit antenna count");
    formulas_cmd->add_option("--tx-max", tx_max, "largest transmit antenna count");
    formulas_cmd->add_option("--alphas", alphas, "CSIT quality grid");

    CommonArgs simulate_args;
    int threads = 0;
    std::optional<double> tolerance;
    auto* simulate_cmd = app.add_subcommand(
        "simulate", "Monte Carlo slope estimation against the closed forms");
    add_common_options(simulate_cmd, simulate_args);
    simulate_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    simulate_cmd->add_option("--tolerance", tolerance, "slope tolerance for the pass/fail column");

    CommonArgs verify_args;
    int draws = 1000, tx = 0, vrx = 2, jammer = 4;
    bool inject_fault = false;
    auto* verify_cmd =
        app.add_subcommand("verify", "check precoder nulling/alignment residuals");
    add_common_options(verify_cmd, verify_args);
    verify_cmd->add_option("--draws", draws, "random draws per antenna configuration");
    verify_cmd->add_option("--tx", tx, "verify a single configuration with this many tx antennas");
    verify_cmd->add_option("--rx", vrx, "receive antennas for --tx");
    verify_cmd->add_option("--jammer", jammer, "jammer antennas for --tx");
    verify_cmd->add_flag("--inject-fault", inject_fault,
                         "corrupt one draw to demonstrate detection");

    CommonArgs plot_args;
    std::string plot_in, plot_out, plot_title;
    auto* plot_cmd = app.add_subcommand("plot", "render a results CSV as a static SVG chart");
    add_common_options(plot_cmd, plot_args);
    plot_cmd->add_option("--in", plot_in, "results CSV (or [plot] in = ... in the config)");
    plot_cmd->add_option("--out-svg", plot_out, "output SVG path (alias of --out)");
    plot_cmd->add_option("--title", plot_title, "chart title");

    CLI11_PARSE(app, argc, argv);

    try {
        if (formulas_cmd->parsed()) {
            return run_formulas(formulas_args, preset, rx, tx_min, tx_max, alphas);
        }
        if (simulate_cmd->parsed()) return run_simulate(simulate_args, threads, tolerance);
        if (verify_cmd->parsed()) {
            if (tx == 0 && verify_cmd->count("--rx") + verify_cmd->count("--jammer") > 0) {
                // Validate the pair even without --tx so misconfiguration fails fast.
                srs::ScenarioConfig probe;
                probe.tx_antennas = std::max(2 * vrx, 1);
                probe.rx_antennas = vrx;
                probe.jammer_antennas = jammer;
                probe.snr_grid = srs::default_snr_grid();
                probe.validate();
            }
            return run_verify(verify_args, draws, tx, vrx, jammer, inject_fault);
        }
        if (plot_cmd->parsed()) return run_plot(plot_args, plot_in, plot_out, plot_title);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

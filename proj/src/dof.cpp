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

#include "srs/dof.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "srs/formulas.hpp"

namespace srs {

namespace {

constexpr int kMaxAttemptsPerTrial = 8;

const std::vector<std::string>& curve_names() {
    static const std::vector<std::string> names = {
        "sum_secure",      "common_rate_1",     "common_rate_2",     "private_rate_1",
        "private_rate_2",  "common_leak_at_1",  "common_leak_at_2",  "private_leak_at_1",
        "private_leak_at_2"};
    return names;
}

std::vector<double> breakdown_values(const RateBreakdown& rb) {
    return {rb.sum_secure_rate,    rb.common_rate_1,     rb.common_rate_2,
            rb.private_rate_1,     rb.private_rate_2,    rb.common_leak_at_1,
            rb.common_leak_at_2,   rb.private_leak_at_1, rb.private_leak_at_2};
}

struct TrialResult {
    // values[curve][grid_point]
    std::vector<std::vector<double>> values;
    int attempts = 1;
};

TrialResult run_trial(const ScenarioConfig& cfg, Scheme scheme, const EstimateOptions& options,
                      int trial) {
    const std::size_t curves = curve_names().size();
    for (int attempt = 0; attempt < kMaxAttemptsPerTrial; ++attempt) {
        try {
            const ChannelRealization real = sample_realization(cfg, trial, attempt);
            const std::uint64_t csit_seed =
                derive_seed(cfg.seed, {kStreamCsit, static_cast<std::uint64_t>(trial),
                                       static_cast<std::uint64_t>(attempt)});

            TrialResult result;
            result.attempts = attempt + 1;
            result.values.assign(curves, std::vector<double>(cfg.snr_grid.size(), 0.0));

            for (std::size_t p_idx = 0; p_idx < cfg.snr_grid.size(); ++p_idx) {
                const double P = cfg.snr_grid[p_idx];
                // Re-seeding per grid point keeps the error draw coherent
                // across P: the same base matrix scaled by P^(-alpha/2).
                Rng stream(csit_seed);
                const CsitView csit = split_csit(real, cfg.csit_quality, P, stream);

                RateBreakdown rb;
                if (scheme == Scheme::SRS) {
                    const PrecoderSet ps = design_srs(csit, real);
                    const PowerPolicy policy =
                        load_powers(ps, P, cfg.csit_quality, options.rate_options);
                    rb = evaluate_rates(ps, policy, real, options.rate_options, cfg.noise_diag);
                } else {
                    const ZfPrecoderSet zf = design_zf(csit);
                    const PrecoderSet ps = as_precoder_set(zf, cfg.jammer_antennas);
                    const PowerPolicy policy =
                        load_zf_powers(zf, P, cfg.csit_quality, options.rate_options);
                    rb = evaluate_rates(ps, policy, real, options.rate_options, cfg.noise_diag);
                }

                const std::vector<double> vals = breakdown_values(rb);
                for (std::size_t c = 0; c < curves; ++c) result.values[c][p_idx] = vals[c];
            }
            return result;
        } catch (const InfeasibleDesign&) {
            continue;  // measure-zero draw, redraw the trial
        }
    }
    throw std::runtime_error("estimate_sdof: trial " + std::to_string(trial) +
                             " stayed infeasible after " + std::to_string(kMaxAttemptsPerTrial) +
                             " redraws");
}

}  // namespace

const char* scheme_name(Scheme s) { return s == Scheme::SRS ? "srs" : "zf"; }

SdofEstimate estimate_sdof(const ScenarioConfig& cfg, Scheme scheme,
                           const EstimateOptions& options) {
    cfg.validate();
    if (cfg.snr_grid.size() < 5) {
        throw std::invalid_argument("estimate_sdof: snr_grid needs at least 5 points");
    }
    if (std::log10(cfg.snr_grid.back() / cfg.snr_grid.front()) < 4.0 - 1e-9) {
        throw std::invalid_argument("estimate_sdof: snr_grid must span at least 4 decades");
    }
    if (cfg.trials < 100) {
        throw std::invalid_argument("estimate_sdof: needs at least 100 trials");
    }

    const std::size_t curves = curve_names().size();
    const std::size_t grid = cfg.snr_grid.size();

    std::vector<TrialResult> per_trial(cfg.trials);
    std::exception_ptr worker_error;
    std::mutex error_mutex;

    int thread_count = options.threads > 0
                           ? options.threads
                           : static_cast<int>(std::thread::hardware_concurrency());
    thread_count = std::max(1, std::min(thread_count, cfg.trials));

    const auto worker = [&](int first, int last) {
        try {
            for (int t = first; t < last; ++t) {
                per_trial[t] = run_trial(cfg, scheme, options, t);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!worker_error) worker_error = std::current_exception();
        }
    };

    if (thread_count == 1) {
        worker(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (cfg.trials + thread_count - 1) / thread_count;
        for (int k = 0; k < thread_count; ++k) {
            const int first = k * chunk;
            const int last = std::min(cfg.trials, first + chunk);
            if (first >= last) break;
            pool.emplace_back(worker, first, last);
        }
        for (auto& th : pool) th.join();
    }
    if (worker_error) std::rethrow_exception(worker_error);

    // Deterministic reduction in trial order.
    int resampled = 0;
    std::vector<std::vector<double>> mean(curves, std::vector<double>(grid, 0.0));
    for (int t = 0; t < cfg.trials; ++t) {
        resampled += per_trial[t].attempts - 1;
        for (std::size_t c = 0; c < curves; ++c) {
            for (std::size_t p = 0; p < grid; ++p) {
                mean[c][p] += per_trial[t].values[c][p];
            }
        }
    }
    const int resample_budget = std::max(1, cfg.trials / 100);
    if (resampled > resample_budget) {
        throw std::runtime_error("estimate_sdof: " + std::to_string(resampled) +
                                 " degenerate draws exceed the 1% resampling budget; "
                                 "this points at a bug, not bad luck");
    }
    for (auto& curve : mean) {
        for (double& v : curve) v /= cfg.trials;
    }

    SdofEstimate est;
    est.scheme = scheme;
    est.trials = cfg.trials;
    est.resampled_trials = resampled;
    est.log2_powers.reserve(grid);
    for (double P : cfg.snr_grid) est.log2_powers.push_back(std::log2(P));

    const auto fit_curve = [&](const std::vector<double>& ys) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(grid);
        for (std::size_t p = 0; p < grid; ++p) pts.emplace_back(est.log2_powers[p], ys[p]);
        return fit_rate_slope(pts).slope;
    };

    for (std::size_t c = 0; c < curves; ++c) {
        est.mean_curves[curve_names()[c]] = mean[c];
        est.per_message_slopes[curve_names()[c]] = fit_curve(mean[c]);
    }
    est.sum_sdof_slope = est.per_message_slopes.at("sum_secure");

    std::vector<double> total_leak(grid, 0.0);
    for (const char* leak : {"common_leak_at_1", "common_leak_at_2", "private_leak_at_1",
                             "private_leak_at_2"}) {
        const auto& curve = est.mean_curves.at(leak);
        for (std::size_t p = 0; p < grid; ++p) total_leak[p] += curve[p];
    }
    est.leakage_slope = fit_curve(total_leak);

    est.per_trial_sum_slopes.reserve(cfg.trials);
    est.per_trial_sum_curves.reserve(cfg.trials);
    double slope_sum = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
        const double s = fit_curve(per_trial[t].values[0]);
        est.per_trial_sum_slopes.push_back(s);
        est.per_trial_sum_curves.push_back(per_trial[t].values[0]);
        slope_sum += s;
    }
    if (cfg.trials > 1) {
        const double slope_mean = slope_sum / cfg.trials;
        double var = 0.0;
        for (double s : est.per_trial_sum_slopes) var += (s - slope_mean) * (s - slope_mean);
        var /= (cfg.trials - 1);
        est.slope_stderr = std::sqrt(var / cfg.trials);
    }
    return est;
}

std::vector<SweepResult> sweep(const ScenarioConfig& base, const std::vector<int>& tx_grid,
                               const std::vector<double>& alpha_grid,
                               const std::vector<Scheme>& schemes,
                               const EstimateOptions& options) {
    if (tx_grid.empty() || alpha_grid.empty() || schemes.empty()) {
        throw std::invalid_argument("sweep: empty grid");
    }
    std::vector<SweepResult> results;
    results.reserve(tx_grid.size() * alpha_grid.size() * schemes.size());

    for (int M : tx_grid) {
        for (double alpha : alpha_grid) {
            for (Scheme scheme : schemes) {
                ScenarioConfig cfg = base;
                cfg.tx_antennas = M;
                cfg.csit_quality = alpha;
                cfg.seed = derive_seed(
                    base.seed, {kStreamSweepCell, static_cast<std::uint64_t>(M),
                                static_cast<std::uint64_t>(cfg.rx_antennas),
                                std::bit_cast<std::uint64_t>(alpha),
                                static_cast<std::uint64_t>(scheme == Scheme::SRS ? 0 : 1)});

                SweepResult r;
                r.cell = {M, alpha, scheme};
                r.rx_antennas = cfg.rx_antennas;
                r.jammer_antennas = cfg.jammer_antennas;
                r.formula_value = scheme == Scheme::SRS
                                      ? srs_sum_sdof(M, cfg.rx_antennas, alpha)
                                      : zf_sum_sdof(M, cfg.rx_antennas, alpha);
                r.estimate = estimate_sdof(cfg, scheme, options);
                results.push_back(std::move(r));
            }
        }
    }
    return results;
}

}  // namespace srs

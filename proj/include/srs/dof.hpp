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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "srs/channel.hpp"
#include "srs/rate_engine.hpp"

namespace srs {

enum class Scheme { SRS, ZF };

const char* scheme_name(Scheme s);

/// Monte Carlo estimate of the secure-rate slope (degrees of freedom) over
/// the configured power grid. Rates are averaged over trials per grid point
/// before the line fit; per-trial fits feed the standard error.
struct SdofEstimate {
    Scheme scheme = Scheme::SRS;
    double sum_sdof_slope = 0.0;
    double leakage_slope = 0.0;  ///< slope of the summed leakage rates
    std::map<std::string, double> per_message_slopes;
    double slope_stderr = 0.0;
    int trials = 0;
    int resampled_trials = 0;  ///< degenerate draws that were redrawn

    // Diagnostics.
    std::vector<double> log2_powers;
    std::map<std::string, std::vector<double>> mean_curves;
    std::vector<double> per_trial_sum_slopes;
    std::vector<std::vector<double>> per_trial_sum_curves;
};

struct EstimateOptions {
    int threads = 0;  ///< 0 = hardware concurrency
    RateOptions rate_options;
};

/// Requires a grid of >= 5 points spanning >= 4 decades and >= 100 trials
/// (throws otherwise). Fully reproducible from cfg.seed; trials run
/// concurrently with a deterministic reduction order.
SdofEstimate estimate_sdof(const ScenarioConfig& cfg, Scheme scheme,
                           const EstimateOptions& options = {});

struct SweepCell {
    int tx_antennas = 1;
    double alpha = 0.0;
    Scheme scheme = Scheme::SRS;
};

struct SweepResult {
    SweepCell cell;
    int rx_antennas = 1;
    int jammer_antennas = 2;
    double formula_value = 0.0;  ///< closed-form slope for the cell
    SdofEstimate estimate;
};

/// Cartesian sweep over (tx antennas) x (alpha) x (scheme) with per-cell
/// derived seeds; rx/jammer counts, grid and trial budget come from base.
std::vector<SweepResult> sweep(const ScenarioConfig& base, const std::vector<int>& tx_grid,
                               const std::vector<double>& alpha_grid,
                               const std::vector<Scheme>& schemes,
                               const EstimateOptions& options = {});

}  // namespace srs

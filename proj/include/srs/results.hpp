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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace srs {

/// One experiment cell. Formula value is always present; the measured
/// columns only exist for simulation runs.
struct ExperimentResultRow {
    std::string scheme;  // "srs" | "zf" | "kuser"
    int M = 0;
    int N = 0;
    int J = 0;
    std::optional<int> K;
    double alpha = 0.0;
    double formula = 0.0;
    std::optional<double> slope;
    std::optional<double> leak_slope;
    std::optional<double> stderr_slope;
    std::optional<long long> trials;
    std::optional<std::uint64_t> seed;
};

inline constexpr const char* kResultsSchemaVersion = "srsim-results-v1";

/// CSV with a schema-version comment line and the fixed column set
/// scheme,M,N,J,K,alpha,formula,slope,leak_slope,stderr,trials,seed.
std::string results_to_csv(const std::vector<ExperimentResultRow>& rows);
std::vector<ExperimentResultRow> results_from_csv(const std::string& text);

void write_results_csv(const std::string& path, const std::vector<ExperimentResultRow>& rows);
std::vector<ExperimentResultRow> read_results_csv(const std::string& path);

}  // namespace srs

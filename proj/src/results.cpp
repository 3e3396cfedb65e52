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

#include "srs/results.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srs {

namespace {

constexpr const char* kHeader = "scheme,M,N,J,K,alpha,formula,slope,leak_slope,stderr,trials,seed";

// Shortest representation that parses back to the identical double.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

std::string results_to_csv(const std::vector<ExperimentResultRow>& rows) {
    std::ostringstream out;
    out << "# " << kResultsSchemaVersion << "\n" << kHeader << "\n";
    for (const auto& r : rows) {
        out << r.scheme << ',' << r.M << ',' << r.N << ',' << r.J << ',';
        if (r.K) out << *r.K;
        out << ',' << format_double(r.alpha) << ',' << format_double(r.formula) << ',';
        if (r.slope) out << format_double(*r.slope);
        out << ',';
        if (r.leak_slope) out << format_double(*r.leak_slope);
        out << ',';
        if (r.stderr_slope) out << format_double(*r.stderr_slope);
        out << ',';
        if (r.trials) out << *r.trials;
        out << ',';
        if (r.seed) out << *r.seed;
        out << '\n';
    }
    return out.str();
}

std::vector<ExperimentResultRow> results_from_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    std::vector<ExperimentResultRow> rows;
    bool saw_header = false;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!saw_header) {
            if (line != kHeader) {
                throw std::invalid_argument("results CSV: unexpected header '" + line + "'");
            }
            saw_header = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 12) {
            throw std::invalid_argument("results CSV: expected 12 columns, got " +
                                        std::to_string(fields.size()));
        }
        ExperimentResultRow r;
        r.scheme = fields[0];
        r.M = std::stoi(fields[1]);
        r.N = std::stoi(fields[2]);
        r.J = std::stoi(fields[3]);
        if (!fields[4].empty()) r.K = std::stoi(fields[4]);
        r.alpha = std::stod(fields[5]);
        r.formula = std::stod(fields[6]);
        if (!fields[7].empty()) r.slope = std::stod(fields[7]);
        if (!fields[8].empty()) r.leak_slope = std::stod(fields[8]);
        if (!fields[9].empty()) r.stderr_slope = std::stod(fields[9]);
        if (!fields[10].empty()) r.trials = std::stoll(fields[10]);
        if (!fields[11].empty()) r.seed = std::stoull(fields[11]);
        rows.push_back(std::move(r));
    }
    if (!saw_header) {
        throw std::invalid_argument("results CSV: missing header line");
    }
    return rows;
}

void write_results_csv(const std::string& path, const std::vector<ExperimentResultRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << results_to_csv(rows);
}

std::vector<ExperimentResultRow> read_results_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return results_from_csv(buffer.str());
}

}  // namespace srs

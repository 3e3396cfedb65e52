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

#include "srs/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srs {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string strip_comment(const std::string& line) {
    const auto pos = line.find_first_of("#;");
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

[[noreturn]] void fail(const std::string& section, const std::string& key,
                       const std::string& what) {
    throw std::invalid_argument("config [" + section + "] " + key + ": " + what);
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        fail(section, key, "not a number: '" + value + "'");
    }
    if (used != value.size() || !std::isfinite(v)) {
        fail(section, key, "not a finite number: '" + value + "'");
    }
    return v;
}

long long parse_int(const std::string& section, const std::string& key,
                    const std::string& value) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        fail(section, key, "not an integer: '" + value + "'");
    }
    if (used != value.size()) fail(section, key, "not an integer: '" + value + "'");
    return v;
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

ConfigFile ConfigFile::parse_string(const std::string& text) {
    ConfigFile cfg;
    std::stringstream ss(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            cfg.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        }
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

bool ConfigFile::has_section(const std::string& section) const {
    return sections_.count(section) > 0;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) > 0;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    if (it == sections_.end() || it->second.count(key) == 0) {
        fail(section, key, "missing required key");
    }
    return it->second.at(key);
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
}

long long ConfigFile::get_int(const std::string& section, const std::string& key) const {
    return parse_int(section, key, get_string(section, key));
}

long long ConfigFile::get_int(const std::string& section, const std::string& key,
                              long long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
    return parse_double(section, key, get_string(section, key));
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

std::vector<double> ConfigFile::get_double_list(const std::string& section,
                                                const std::string& key,
                                                const std::vector<double>& fallback) const {
    if (!has(section, key)) return fallback;
    std::vector<double> out;
    for (const auto& item : split_list(get_string(section, key))) {
        out.push_back(parse_double(section, key, item));
    }
    return out;
}

std::vector<int> ConfigFile::get_int_list(const std::string& section, const std::string& key,
                                          const std::vector<int>& fallback) const {
    if (!has(section, key)) return fallback;
    std::vector<int> out;
    for (const auto& item : split_list(get_string(section, key))) {
        out.push_back(static_cast<int>(parse_int(section, key, item)));
    }
    return out;
}

std::vector<std::string> ConfigFile::get_string_list(
    const std::string& section, const std::string& key,
    const std::vector<std::string>& fallback) const {
    if (!has(section, key)) return fallback;
    return split_list(get_string(section, key));
}

std::vector<double> default_snr_grid() {
    return {1e6, std::pow(10.0, 7.5), 1e9, std::pow(10.0, 10.5), 1e12};
}

ScenarioConfig scenario_from_config(const ConfigFile& file) {
    ScenarioConfig cfg;
    cfg.tx_antennas = static_cast<int>(file.get_int("scenario", "tx_antennas", cfg.tx_antennas));
    cfg.rx_antennas = static_cast<int>(file.get_int("scenario", "rx_antennas", cfg.rx_antennas));
    cfg.jammer_antennas =
        static_cast<int>(file.get_int("scenario", "jammer_antennas", cfg.jammer_antennas));
    cfg.csit_quality = file.get_double("scenario", "alpha", cfg.csit_quality);
    cfg.snr_grid = file.get_double_list("scenario", "snr_grid", default_snr_grid());
    cfg.trials = static_cast<int>(file.get_int("scenario", "trials", cfg.trials));
    cfg.seed = static_cast<std::uint64_t>(file.get_int("scenario", "seed", 1));
    cfg.noise_diag = file.get_double_list("scenario", "noise_diag", {});
    cfg.validate();
    return cfg;
}

}  // namespace srs

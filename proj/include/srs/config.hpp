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

namespace srs {

/// Flat key-value config text with [section] headers; '#' and ';' start
/// comments. Lookups throw std::invalid_argument with the offending
/// section/key on missing required values or malformed numbers.
class ConfigFile {
   public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text);

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    long long get_int(const std::string& section, const std::string& key) const;
    long long get_int(const std::string& section, const std::string& key,
                      long long fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key,
                                        const std::vector<double>& fallback) const;
    std::vector<int> get_int_list(const std::string& section, const std::string& key,
                                  const std::vector<int>& fallback) const;
    std::vector<std::string> get_string_list(const std::string& section, const std::string& key,
                                             const std::vector<std::string>& fallback) const;

   private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// The default power grid: 10^6 .. 10^12 in half-decade-and-a-half steps.
/// Above 10^12 double-precision conditioning of the capacity evaluation
/// degrades.
std::vector<double> default_snr_grid();

/// Builds a ScenarioConfig from the [scenario] section (all keys optional,
/// validated afterwards).
ScenarioConfig scenario_from_config(const ConfigFile& file);

}  // namespace srs

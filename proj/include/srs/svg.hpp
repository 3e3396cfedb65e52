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

#include <string>
#include <utility>
#include <vector>

namespace srs {

struct ChartSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, y), drawn in order
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
    int width = 860;
    int height = 560;
};

/// Self-contained static SVG line chart (no scripts, no external
/// references). Throws std::invalid_argument when no series has points.
std::string render_line_chart(const ChartSpec& spec);

void write_line_chart(const std::string& path, const ChartSpec& spec);

}  // namespace srs

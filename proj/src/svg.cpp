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

#include "srs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srs {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round tick spacing to a 1/2/5 decade multiple.
double nice_step(double span, int target_ticks) {
    if (span <= 0) return 1.0;
    const double raw = span / std::max(1, target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm <= 1.0) return mag;
    if (norm <= 2.0) return 2.0 * mag;
    if (norm <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace

std::string render_line_chart(const ChartSpec& spec) {
    bool any_points = false;
    for (const auto& s : spec.series) any_points = any_points || !s.points.empty();
    if (!any_points) throw std::invalid_argument("render_line_chart: no data points");

    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool first = true;
    for (const auto& s : spec.series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    }
    if (x_max == x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max == y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double margin_left = 70, margin_right = 170, margin_top = 50, margin_bottom = 60;
    const double plot_w = spec.width - margin_left - margin_right;
    const double plot_h = spec.height - margin_top - margin_bottom;
    const auto to_px = [&](double x, double y) {
        const double px = margin_left + (x - x_min) / (x_max - x_min) * plot_w;
        const double py = margin_top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h;
        return std::make_pair(px, py);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << spec.width / 2 << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"17\">" << escape_xml(spec.title)
        << "</text>\n";

    // Axes frame.
    svg << "<rect x=\"" << fmt(margin_left) << "\" y=\"" << fmt(margin_top) << "\" width=\""
        << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    const double x_step = nice_step(x_max - x_min, 6);
    for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-12; x += x_step) {
        const auto [px, py0] = to_px(x, y_min);
        svg << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(margin_top) << "\" x2=\"" << fmt(px)
            << "\" y2=\"" << fmt(margin_top + plot_h)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(py0 + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(x)
            << "</text>\n";
    }
    const double y_step = nice_step(y_max - y_min, 6);
    for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-12; y += y_step) {
        const auto [px0, py] = to_px(x_min, y);
        svg << "<line x1=\"" << fmt(margin_left) << "\" y1=\"" << fmt(py) << "\" x2=\""
            << fmt(margin_left + plot_w) << "\" y2=\"" << fmt(py)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(px0 - 8) << "\" y=\"" << fmt(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(y)
            << "</text>\n";
    }

    svg << "<text x=\"" << fmt(margin_left + plot_w / 2) << "\" y=\""
        << fmt(spec.height - 14.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << escape_xml(spec.x_label) << "</text>\n";
    svg << "<text x=\"20\" y=\"" << fmt(margin_top + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        << "transform=\"rotate(-90 20 " << fmt(margin_top + plot_h / 2) << ")\">"
        << escape_xml(spec.y_label) << "</text>\n";

    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const auto& s = spec.series[i];
        if (s.points.empty()) continue;
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto& [x, y] : s.points) {
            const auto [px, py] = to_px(x, y);
            svg << fmt(px) << "," << fmt(py) << " ";
        }
        svg << "\"/>\n";
        for (const auto& [x, y] : s.points) {
            const auto [px, py] = to_px(x, y);
            svg << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py) << "\" r=\"3\" fill=\""
                << color << "\"/>\n";
        }
        const double ly = margin_top + 10 + 20.0 * static_cast<double>(i);
        const double lx = margin_left + plot_w + 14;
        svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 22)
            << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fmt(lx + 28) << "\" y=\"" << fmt(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(s.label)
            << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

void write_line_chart(const std::string& path, const ChartSpec& spec) {
    const std::string content = render_line_chart(spec);  // render before touching the file
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace srs

// Copyright 2026 The phasecov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phasecov/harness/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "phasecov/harness/csv.hpp"

namespace phasecov::harness {

namespace {

constexpr double kWidth = 720.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 690.0;
constexpr double kPlotTop = 40.0;
constexpr double kPlotBottom = 250.0;
constexpr double kStripTop = 300.0;
constexpr double kStripBottom = 460.0;
constexpr double kHeight = 500.0;
constexpr std::size_t kMaxPoints = 400;
constexpr std::size_t kMaxCells = 120;

constexpr std::array<const char *, 6> kColours{"#1f77b4", "#d62728", "#2ca02c",
                                               "#9467bd", "#ff7f0e", "#17becf"};

std::vector<std::size_t> thin(std::size_t n, std::size_t limit) {
    std::vector<std::size_t> idx;
    if (n == 0) {
        return idx;
    }
    const std::size_t count = std::min(n, limit);
    for (std::size_t i = 0; i < count; ++i) {
        idx.push_back(count == 1 ? 0 : i * (n - 1) / (count - 1));
    }
    return idx;
}

std::string heat(double x) {
    x = std::clamp(x, 0.0, 1.0);
    const auto r = static_cast<int>(std::lround(255.0 * (1.0 - 0.9 * x)));
    const auto g = static_cast<int>(std::lround(255.0 * (1.0 - 0.75 * x)));
    const auto b = static_cast<int>(std::lround(255.0 * (1.0 - 0.35 * x)));
    return fmt::format("#{:02x}{:02x}{:02x}", r, g, b);
}

} // namespace

void write_svg(const std::filesystem::path &trajectory_csv,
               const std::filesystem::path &phase_dist_csv, const std::filesystem::path &svg) {
    const CsvTable traj = read_csv(trajectory_csv);
    const CsvTable dist = read_csv(phase_dist_csv);

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"11\">\n"
        "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
        kWidth, kHeight);

    const std::ptrdiff_t t_col = traj.column("t");
    std::vector<std::ptrdiff_t> lines;
    for (std::size_t c = 0; c < traj.columns.size(); ++c) {
        if (traj.columns[c].rfind("delta_phi_", 0) == 0) {
            lines.push_back(static_cast<std::ptrdiff_t>(c));
        }
    }

    double t_min = 0.0;
    double t_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
    if (t_col >= 0 && !traj.rows.empty()) {
        t_min = traj.rows.front()[static_cast<std::size_t>(t_col)];
        t_max = traj.rows.back()[static_cast<std::size_t>(t_col)];
        bool first = true;
        for (const auto &row : traj.rows) {
            for (std::ptrdiff_t c : lines) {
                const double v = row[static_cast<std::size_t>(c)];
                if (!std::isfinite(v)) {
                    continue;
                }
                y_min = first ? v : std::min(y_min, v);
                y_max = first ? v : std::max(y_max, v);
                first = false;
            }
        }
    }
    if (t_max <= t_min) {
        t_max = t_min + 1.0;
    }
    if (y_max - y_min < 1e-12) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const auto x_of = [&](double t) {
        return kLeft + (kRight - kLeft) * (t - t_min) / (t_max - t_min);
    };
    const auto y_of = [&](double v) {
        return kPlotBottom - (kPlotBottom - kPlotTop) * (v - y_min) / (y_max - y_min);
    };

    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                       "stroke=\"#444\"/>\n",
                       kLeft, kPlotTop, kRight - kLeft, kPlotBottom - kPlotTop);
    out += fmt::format("<text x=\"{}\" y=\"{}\">delta phi</text>\n", kLeft, kPlotTop - 10.0);
    out += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n",
                       kLeft - 5.0, kPlotTop + 4.0, y_max);
    out += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n",
                       kLeft - 5.0, kPlotBottom + 4.0, y_min);

    const std::vector<std::size_t> picks = thin(traj.rows.size(), kMaxPoints);
    for (std::size_t li = 0; li < lines.size() && t_col >= 0; ++li) {
        const auto c = static_cast<std::size_t>(lines[li]);
        std::string points;
        for (std::size_t i : picks) {
            const double v = traj.rows[i][c];
            if (!std::isfinite(v)) {
                continue;
            }
            points += fmt::format("{:.2f},{:.2f} ", x_of(traj.rows[i][static_cast<std::size_t>(t_col)]),
                                  y_of(v));
        }
        const char *colour = kColours[li % kColours.size()];
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
                           "points=\"{}\"/>\n",
                           colour, points);
        out += fmt::format("<text x=\"{}\" y=\"{:.2f}\" fill=\"{}\">{}</text>\n", kLeft + 200.0 * static_cast<double>(li),
                           kPlotBottom + 18.0, colour, traj.columns[c].substr(10));
    }

    // Heat strip: time across, phase down.
    const std::ptrdiff_t dist_t = dist.column("t");
    const std::size_t first_phi = dist_t >= 0 ? 1 : 0;
    const std::size_t grid = dist.columns.size() - first_phi;
    out += fmt::format("<text x=\"{}\" y=\"{}\">p(phi, t)</text>\n", kLeft, kStripTop - 10.0);
    if (grid > 0 && !dist.rows.empty()) {
        double peak = 0.0;
        for (const auto &row : dist.rows) {
            for (std::size_t j = first_phi; j < row.size(); ++j) {
                if (std::isfinite(row[j])) {
                    peak = std::max(peak, row[j]);
                }
            }
        }
        const std::vector<std::size_t> cols = thin(dist.rows.size(), kMaxCells);
        const std::vector<std::size_t> bins = thin(grid, kMaxCells / 2);
        const double cw = (kRight - kLeft) / static_cast<double>(cols.size());
        const double ch = (kStripBottom - kStripTop) / static_cast<double>(bins.size());
        for (std::size_t a = 0; a < cols.size(); ++a) {
            for (std::size_t b = 0; b < bins.size(); ++b) {
                const double v = dist.rows[cols[a]][first_phi + bins[b]];
                const double level = peak > 0.0 && std::isfinite(v) ? v / peak : 0.0;
                out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" "
                                   "height=\"{:.2f}\" fill=\"{}\"/>\n",
                                   kLeft + cw * static_cast<double>(a),
                                   kStripTop + ch * static_cast<double>(b), cw + 0.05, ch + 0.05,
                                   heat(level));
            }
        }
        out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                           "stroke=\"#444\"/>\n",
                           kLeft, kStripTop, kRight - kLeft, kStripBottom - kStripTop);
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">0</text>\n", kLeft - 5.0,
                           kStripTop + 10.0);
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">2pi</text>\n",
                           kLeft - 5.0, kStripBottom);
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\">t = {:.4g}</text>\n", kLeft, kHeight - 20.0,
                       t_min);
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">t = {:.4g}</text>\n", kRight,
                       kHeight - 20.0, t_max);
    out += "</svg>\n";
    write_file(svg, out);
}

} // namespace phasecov::harness

// SPDX-License-Identifier: Apache-2.0
//
// irslink: received-power models for conventional and IRS-assisted small cells
// Copyright (C) 2026 The irslink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Minimal self-contained SVG rendering of sweep tables. Plots only draw the
// values already present in a table; nothing is recomputed here.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csv.hpp"
#include "sweep.hpp"

namespace irslink {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

namespace detail {

inline constexpr const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

inline std::string fmt(double v, const char *spec = "%.6g")
{
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string escape_xml(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

/// Tick positions at a 1/2/5 x 10^k spacing.
inline std::vector<double> nice_ticks(double lo, double hi, int target = 6)
{
    std::vector<double> ticks;
    if (!(hi > lo))
        return {lo};
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
        ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    return ticks;
}

} // namespace detail

/// Line chart of one or more series. Non-finite points are skipped.
inline std::string render_line_svg(const std::vector<PlotSeries> &series, const std::string &title,
                                   const std::string &x_label, const std::string &y_label)
{
    constexpr double width = 800, height = 500, left = 80, right = 200, top = 50, bottom = 60;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto &s : series)
        for (const auto &[x, y] : s.points)
            if (std::isfinite(x) && std::isfinite(y)) {
                x0 = std::min(x0, x);
                x1 = std::max(x1, x);
                y0 = std::min(y0, y);
                y1 = std::max(y1, y);
            }
    if (!std::isfinite(x0)) {
        x0 = 0;
        x1 = 1;
        y0 = 0;
        y1 = 1;
    }
    if (x1 == x0)
        x1 = x0 + 1;
    if (y1 == y0) {
        y0 -= 1;
        y1 += 1;
    }
    const double pw = width - left - right, ph = height - top - bottom;
    auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto sy = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
                      + detail::fmt(width) + "\" height=\"" + detail::fmt(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + detail::fmt(left + pw / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
           + detail::escape_xml(title) + "</text>\n";
    svg += "<rect x=\"" + detail::fmt(left) + "\" y=\"" + detail::fmt(top) + "\" width=\"" + detail::fmt(pw)
           + "\" height=\"" + detail::fmt(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : detail::nice_ticks(x0, x1)) {
        const std::string x = detail::fmt(sx(t));
        svg += "<line x1=\"" + x + "\" y1=\"" + detail::fmt(top) + "\" x2=\"" + x + "\" y2=\"" + detail::fmt(top + ph)
               + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + x + "\" y=\"" + detail::fmt(top + ph + 18) + "\" text-anchor=\"middle\">" + detail::fmt(t)
               + "</text>\n";
    }
    for (double t : detail::nice_ticks(y0, y1)) {
        const std::string y = detail::fmt(sy(t));
        svg += "<line x1=\"" + detail::fmt(left) + "\" y1=\"" + y + "\" x2=\"" + detail::fmt(left + pw) + "\" y2=\"" + y
               + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + detail::fmt(left - 8) + "\" y=\"" + y + "\" text-anchor=\"end\" dominant-baseline=\"middle\">"
               + detail::fmt(t) + "</text>\n";
    }
    svg += "<text x=\"" + detail::fmt(left + pw / 2) + "\" y=\"" + detail::fmt(height - 15)
           + "\" text-anchor=\"middle\">" + detail::escape_xml(x_label) + "</text>\n";
    svg += "<text transform=\"translate(20," + detail::fmt(top + ph / 2) + ") rotate(-90)\" text-anchor=\"middle\">"
           + detail::escape_xml(y_label) + "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char *color = detail::palette[i % std::size(detail::palette)];
        std::string pts;
        for (const auto &[x, y] : series[i].points)
            if (std::isfinite(x) && std::isfinite(y))
                pts += detail::fmt(sx(x), "%.2f") + "," + detail::fmt(sy(y), "%.2f") + " ";
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        const double ly = top + 10 + 20.0 * static_cast<double>(i);
        svg += "<line x1=\"" + detail::fmt(left + pw + 15) + "\" y1=\"" + detail::fmt(ly) + "\" x2=\""
               + detail::fmt(left + pw + 40) + "\" y2=\"" + detail::fmt(ly) + "\" stroke=\"" + color
               + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + detail::fmt(left + pw + 45) + "\" y=\"" + detail::fmt(ly)
               + "\" dominant-baseline=\"middle\">" + detail::escape_xml(series[i].label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

/// Heat map of one model's coverage rows (dBm), blue (weak) to red (strong).
inline std::string render_heatmap_svg(const SweepTable &table, ModelTag model, const std::string &title)
{
    const GridSpec &g = table.scenario.sweep.grid;
    constexpr double left = 70, top = 50, plot = 500, bar = 30;
    const double cw = plot / g.nx, ch = plot / g.ny;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto &r : table.rows)
        if (r.sample.model == model && std::isfinite(r.sample.power_dbm)) {
            lo = std::min(lo, r.sample.power_dbm);
            hi = std::max(hi, r.sample.power_dbm);
        }
    if (!std::isfinite(lo)) {
        lo = 0;
        hi = 1;
    }
    if (hi == lo)
        hi = lo + 1;
    auto color = [&](double v) {
        if (!std::isfinite(v))
            return std::string("#000000");
        const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(255 * t), static_cast<int>(80 * (1 - std::abs(2 * t - 1))),
                      static_cast<int>(255 * (1 - t)));
        return std::string(buf);
    };

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
                      "height=\"620\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + detail::fmt(left + plot / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
           + detail::escape_xml(title) + "</text>\n";
    for (const auto &r : table.rows) {
        if (r.sample.model != model)
            continue;
        const double fx = (r.x_m - g.x_min_m) / (g.x_max_m - g.x_min_m);
        const double fy = (r.y_m - g.y_min_m) / (g.y_max_m - g.y_min_m);
        const double px = left + fx * (plot - cw);
        const double py = top + (1 - fy) * (plot - ch);
        svg += "<rect x=\"" + detail::fmt(px, "%.2f") + "\" y=\"" + detail::fmt(py, "%.2f") + "\" width=\""
               + detail::fmt(cw + 0.5, "%.2f") + "\" height=\"" + detail::fmt(ch + 0.5, "%.2f") + "\" fill=\""
               + color(r.sample.power_dbm) + "\"/>\n";
    }
    svg += "<text x=\"" + detail::fmt(left + plot / 2) + "\" y=\"" + detail::fmt(top + plot + 30)
           + "\" text-anchor=\"middle\">x (m): " + detail::fmt(g.x_min_m) + " .. " + detail::fmt(g.x_max_m) + "</text>\n";
    svg += "<text transform=\"translate(25," + detail::fmt(top + plot / 2) + ") rotate(-90)\" text-anchor=\"middle\">y (m): "
           + detail::fmt(g.y_min_m) + " .. " + detail::fmt(g.y_max_m) + "</text>\n";
    for (int i = 0; i < 50; ++i) {
        const double t = i / 49.0;
        svg += "<rect x=\"" + detail::fmt(left + plot + 30) + "\" y=\"" + detail::fmt(top + (1 - t) * (plot - 10), "%.2f")
               + "\" width=\"" + detail::fmt(bar) + "\" height=\"11\" fill=\"" + color(lo + t * (hi - lo)) + "\"/>\n";
    }
    svg += "<text x=\"" + detail::fmt(left + plot + 65) + "\" y=\"" + detail::fmt(top + 8) + "\">" + detail::fmt(hi, "%.1f")
           + " dBm</text>\n";
    svg += "<text x=\"" + detail::fmt(left + plot + 65) + "\" y=\"" + detail::fmt(top + plot) + "\">" + detail::fmt(lo, "%.1f")
           + " dBm</text>\n";
    svg += "</svg>\n";
    return svg;
}

/// Power (dBm) versus the sweep coordinate, one series per model or per
/// angle pair.
inline std::vector<PlotSeries> series_from_table(const SweepTable &table)
{
    std::vector<PlotSeries> out;
    std::map<std::string, std::size_t> index;
    for (const auto &r : table.rows) {
        std::string label;
        if (table.kind == SweepKind::Angle)
            label = "theta_t=" + format_number(r.theta_t_deg) + ", theta_r=" + format_number(r.theta_r_deg);
        else
            label = std::string(to_string(r.sample.model));
        auto [it, inserted] = index.try_emplace(label, out.size());
        if (inserted)
            out.push_back({label, {}});
        out[it->second].points.emplace_back(r.distance_m, r.sample.power_dbm);
    }
    return out;
}

inline std::vector<PlotSeries> series_from_summary(const ComparisonSummary &summary)
{
    PlotSeries conv{"conventional", {}}, irs{"irs", {}};
    for (const auto &r : summary.rows) {
        conv.points.emplace_back(r.distance_m, r.conventional_dbm);
        irs.points.emplace_back(r.distance_m, r.irs_dbm);
    }
    return {conv, irs};
}

} // namespace irslink

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

// Scenario files: one JSON document with the blocks
//
//   radio     carrier_frequency_hz, transmit_power_w, bandwidth_hz (required),
//             tx_gain_linear, rx_gain_linear (default 1)
//   geometry  base_station, device (required), irs (optional); [x, y, z] meters
//   panel     required iff geometry.irs is present; angles in degrees
//   fading    optional; mode "deterministic" (with h, default 1) or "rayleigh",
//             alpha (default 2), seed (default 0)
//   sweep     optional; kind, start_m/stop_m/step_m, angle_pairs_deg, grid,
//             monte_carlo_n, workers
//
// Unknown keys are rejected. Every error names the dotted field path.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "sweep.hpp"

namespace irslink {

using ScenarioFile = Scenario;

namespace detail {

using nlohmann::json;

class FieldReader {
public:
    FieldReader(const json &obj, std::string path) : obj_(obj), path_(std::move(path))
    {
        if (!obj_.is_object())
            throw ScenarioError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    std::string path(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

    bool has(const std::string &key) const { return obj_.contains(key); }

    const json &at(const std::string &key)
    {
        seen_.insert(key);
        if (!obj_.contains(key))
            throw ScenarioError(path(key), "missing required field");
        return obj_.at(key);
    }

    double number(const std::string &key)
    {
        const json &v = at(key);
        if (!v.is_number())
            throw ScenarioError(path(key), "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            throw ScenarioError(path(key), "expected a finite number");
        return d;
    }

    double number(const std::string &key, double fallback) { return has(key) ? number(key) : fallback; }

    double positive(const std::string &key)
    {
        const double d = number(key);
        if (!(d > 0.0))
            throw ScenarioError(path(key), "must be positive, got " + format_coord(d));
        return d;
    }

    double positive(const std::string &key, double fallback) { return has(key) ? positive(key) : fallback; }

    std::uint64_t unsigned_integer(const std::string &key)
    {
        const json &v = at(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw ScenarioError(path(key), "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }

    std::uint64_t unsigned_integer(const std::string &key, std::uint64_t fallback)
    {
        return has(key) ? unsigned_integer(key) : fallback;
    }

    std::string string(const std::string &key)
    {
        const json &v = at(key);
        if (!v.is_string())
            throw ScenarioError(path(key), "expected a string");
        return v.get<std::string>();
    }

    Point3 point(const std::string &key)
    {
        const json &v = at(key);
        if (!v.is_array() || v.size() != 3)
            throw ScenarioError(path(key), "expected [x, y, z]");
        Point3 p;
        double *dst[3] = {&p.x, &p.y, &p.z};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!v[i].is_number() || !std::isfinite(v[i].get<double>()))
                throw ScenarioError(path(key) + "[" + std::to_string(i) + "]", "expected a finite number");
            *dst[i] = v[i].get<double>();
        }
        return p;
    }

    void finish() const
    {
        for (const auto &[key, value] : obj_.items())
            if (!seen_.count(key))
                throw ScenarioError(path(key), "unknown key");
    }

private:
    const json &obj_;
    std::string path_;
    std::set<std::string> seen_;
};

inline double angle_deg(FieldReader &r, const std::string &key)
{
    const double deg = r.number(key);
    if (!(deg >= 0.0 && deg < 90.0))
        throw ScenarioError(r.path(key), "must lie in [0, 90) degrees, got " + format_coord(deg));
    return deg;
}

inline RadioConfig read_radio(const json &j)
{
    FieldReader r(j, "radio");
    RadioConfig cfg;
    cfg.carrier_frequency_hz = r.positive("carrier_frequency_hz");
    cfg.transmit_power_w = r.positive("transmit_power_w");
    cfg.bandwidth_hz = r.positive("bandwidth_hz");
    cfg.tx_gain_linear = r.positive("tx_gain_linear", 1.0);
    cfg.rx_gain_linear = r.positive("rx_gain_linear", 1.0);
    r.finish();
    return cfg;
}

inline LinkGeometry read_geometry(const json &j)
{
    FieldReader r(j, "geometry");
    LinkGeometry g;
    g.base_station = r.point("base_station");
    g.device = r.point("device");
    if (r.has("irs"))
        g.irs = r.point("irs");
    r.finish();
    return g;
}

inline IrsPanel read_panel(const json &j)
{
    FieldReader r(j, "panel");
    IrsPanel p;
    const auto count = [&](const std::string &key) {
        const std::uint64_t v = r.unsigned_integer(key);
        if (v < 1 || v > std::numeric_limits<std::uint32_t>::max())
            throw ScenarioError(r.path(key), "must be an integer >= 1");
        return static_cast<std::uint32_t>(v);
    };
    p.elements_m = count("elements_m");
    p.elements_n = count("elements_n");
    p.element_len_x_m = r.positive("element_len_x_m");
    p.element_len_y_m = r.positive("element_len_y_m");
    p.reflection_coeff = r.positive("reflection_coeff");
    if (p.reflection_coeff > 1.0)
        throw ScenarioError(r.path("reflection_coeff"), "must lie in (0, 1]");
    p.theta_t_rad = deg_to_rad(angle_deg(r, "theta_t_deg"));
    p.theta_r_rad = deg_to_rad(angle_deg(r, "theta_r_deg"));
    r.finish();
    return p;
}

inline FadingSpec read_fading(const json &j)
{
    FieldReader r(j, "fading");
    FadingSpec f;
    const std::string mode = r.has("mode") ? r.string("mode") : "deterministic";
    if (mode == "deterministic") {
        const double h = r.number("h", 1.0);
        if (h < 0.0)
            throw ScenarioError(r.path("h"), "must be non-negative");
        f.mode = DeterministicFading{h};
    } else if (mode == "rayleigh") {
        f.mode = RayleighUnitMean{};
    } else {
        throw ScenarioError(r.path("mode"), "expected \"deterministic\" or \"rayleigh\", got \"" + mode + "\"");
    }
    f.alpha = r.number("alpha", 2.0);
    if (f.alpha < 1.0)
        throw ScenarioError(r.path("alpha"), "must be >= 1");
    f.seed = r.unsigned_integer("seed", 0);
    r.finish();
    return f;
}

inline SweepKind parse_kind(const std::string &s, const std::string &path)
{
    if (s == "distance") return SweepKind::Distance;
    if (s == "angle") return SweepKind::Angle;
    if (s == "coverage") return SweepKind::Coverage;
    if (s == "compare") return SweepKind::Compare;
    throw ScenarioError(path, "expected one of distance, angle, coverage, compare; got \"" + s + "\"");
}

inline GridSpec read_grid(const json &j)
{
    FieldReader r(j, "sweep.grid");
    GridSpec g;
    g.x_min_m = r.number("x_min_m", g.x_min_m);
    g.x_max_m = r.number("x_max_m", g.x_max_m);
    g.y_min_m = r.number("y_min_m", g.y_min_m);
    g.y_max_m = r.number("y_max_m", g.y_max_m);
    for (auto [key, dst] : {std::pair{"nx", &g.nx}, std::pair{"ny", &g.ny}}) {
        const std::uint64_t v = r.unsigned_integer(key, *dst);
        if (v < 2 || v > 100000)
            throw ScenarioError(r.path(key), "must be an integer in [2, 100000]");
        *dst = static_cast<std::uint32_t>(v);
    }
    g.height_m = r.number("height_m", g.height_m);
    if (!(g.x_min_m < g.x_max_m))
        throw ScenarioError(r.path("x_max_m"), "must exceed x_min_m");
    if (!(g.y_min_m < g.y_max_m))
        throw ScenarioError(r.path("y_max_m"), "must exceed y_min_m");
    r.finish();
    return g;
}

inline SweepSpec read_sweep(const json &j)
{
    FieldReader r(j, "sweep");
    SweepSpec s;
    if (r.has("kind"))
        s.kind = parse_kind(r.string("kind"), r.path("kind"));
    s.start_m = r.positive("start_m", s.start_m);
    s.stop_m = r.positive("stop_m", s.stop_m);
    s.step_m = r.positive("step_m", s.step_m);
    if (s.start_m > s.stop_m)
        throw ScenarioError(r.path("stop_m"), "must not be less than start_m");
    if (r.has("angle_pairs_deg")) {
        const json &pairs = r.at("angle_pairs_deg");
        const std::string base = r.path("angle_pairs_deg");
        if (!pairs.is_array() || pairs.empty())
            throw ScenarioError(base, "expected a non-empty array of [theta_t, theta_r]");
        s.angle_pairs.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const std::string p = base + "[" + std::to_string(i) + "]";
            const json &pair = pairs[i];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
                throw ScenarioError(p, "expected [theta_t_deg, theta_r_deg]");
            const AnglePair ap{pair[0].get<double>(), pair[1].get<double>()};
            for (double deg : {ap.theta_t_deg, ap.theta_r_deg})
                if (!(deg >= 0.0 && deg < 90.0))
                    throw ScenarioError(p, "angles must lie in [0, 90) degrees");
            s.angle_pairs.push_back(ap);
        }
    }
    if (r.has("grid"))
        s.grid = read_grid(r.at("grid"));
    s.monte_carlo_n = r.unsigned_integer("monte_carlo_n", 0);
    const std::uint64_t workers = r.unsigned_integer("workers", 1);
    if (workers < 1 || workers > 1024)
        throw ScenarioError(r.path("workers"), "must be an integer in [1, 1024]");
    s.workers = static_cast<unsigned>(workers);
    r.finish();
    return s;
}

/// Angles travel through the file in degrees with 12 significant digits, so
/// degree values written by hand survive a radians round trip unchanged.
inline json angle_json(double rad)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", rad_to_deg(rad));
    return std::stod(buf);
}

inline json point_json(const Point3 &p) { return json::array({p.x, p.y, p.z}); }

} // namespace detail

/// Parses scenario JSON text. `source` only decorates syntax errors.
inline Scenario parse_scenario_text(const std::string &text, const std::string &source = "<string>")
{
    using detail::json;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ScenarioError("<root>", source + ": malformed JSON: " + e.what());
    }
    detail::FieldReader r(root, "");
    Scenario sc;
    sc.radio = detail::read_radio(r.at("radio"));
    sc.geometry = detail::read_geometry(r.at("geometry"));
    if (r.has("panel"))
        sc.panel = detail::read_panel(r.at("panel"));
    if (sc.geometry.irs && !sc.panel)
        throw ScenarioError("panel", "missing required field (geometry.irs is set)");
    if (sc.panel && !sc.geometry.irs)
        throw ScenarioError("geometry.irs", "missing required field (panel is set)");
    if (r.has("fading"))
        sc.fading = detail::read_fading(r.at("fading"));
    if (r.has("sweep"))
        sc.sweep = detail::read_sweep(r.at("sweep"));
    r.finish();
    try {
        sc.validate();
    } catch (const DomainError &e) {
        throw ScenarioError("scenario", e.what());
    }
    return sc;
}

inline Scenario parse_scenario(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

inline nlohmann::json scenario_to_json(const Scenario &sc)
{
    using detail::json;
    json root;
    root["radio"] = {
        {"carrier_frequency_hz", sc.radio.carrier_frequency_hz},
        {"transmit_power_w", sc.radio.transmit_power_w},
        {"bandwidth_hz", sc.radio.bandwidth_hz},
        {"tx_gain_linear", sc.radio.tx_gain_linear},
        {"rx_gain_linear", sc.radio.rx_gain_linear},
    };
    json geometry = {
        {"base_station", detail::point_json(sc.geometry.base_station)},
        {"device", detail::point_json(sc.geometry.device)},
    };
    if (sc.geometry.irs)
        geometry["irs"] = detail::point_json(*sc.geometry.irs);
    root["geometry"] = geometry;
    if (sc.panel) {
        const IrsPanel &p = *sc.panel;
        root["panel"] = {
            {"elements_m", p.elements_m},
            {"elements_n", p.elements_n},
            {"element_len_x_m", p.element_len_x_m},
            {"element_len_y_m", p.element_len_y_m},
            {"reflection_coeff", p.reflection_coeff},
            {"theta_t_deg", detail::angle_json(p.theta_t_rad)},
            {"theta_r_deg", detail::angle_json(p.theta_r_rad)},
        };
    }
    json fading = {{"alpha", sc.fading.alpha}, {"seed", sc.fading.seed}};
    if (const auto *det = std::get_if<DeterministicFading>(&sc.fading.mode)) {
        fading["mode"] = "deterministic";
        fading["h"] = det->h;
    } else {
        fading["mode"] = "rayleigh";
    }
    root["fading"] = fading;

    const SweepSpec &s = sc.sweep;
    json pairs = json::array();
    for (const auto &p : s.angle_pairs)
        pairs.push_back({p.theta_t_deg, p.theta_r_deg});
    root["sweep"] = {
        {"kind", std::string(to_string(s.kind))},
        {"start_m", s.start_m},
        {"stop_m", s.stop_m},
        {"step_m", s.step_m},
        {"angle_pairs_deg", pairs},
        {"grid",
         {{"x_min_m", s.grid.x_min_m},
          {"x_max_m", s.grid.x_max_m},
          {"y_min_m", s.grid.y_min_m},
          {"y_max_m", s.grid.y_max_m},
          {"nx", s.grid.nx},
          {"ny", s.grid.ny},
          {"height_m", s.grid.height_m}}},
        {"monte_carlo_n", s.monte_carlo_n},
        {"workers", s.workers},
    };
    return root;
}

inline std::string serialize_scenario(const Scenario &sc) { return scenario_to_json(sc).dump(2) + "\n"; }

/// Sidecar metadata for a sweep table: scenario echo, seed and tool version.
/// The worker count is dropped so the sidecar is as deterministic as the CSV.
inline std::string table_metadata(const SweepTable &table)
{
    nlohmann::json meta;
    meta["kind"] = std::string(to_string(table.kind));
    meta["rows"] = table.rows.size();
    meta["seed"] = table.scenario.fading.seed;
    meta["tool_version"] = table.tool_version;
    meta["scenario"] = scenario_to_json(table.scenario);
    meta["scenario"]["sweep"].erase("workers");
    return meta.dump(2) + "\n";
}

} // namespace irslink

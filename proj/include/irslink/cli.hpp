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

// Command-line front end: direct, irs, sweep, coverage, compare.
//
// Exit codes: 0 success, 1 usage error, 2 domain or validation error,
// 3 I/O error. Command-line values override scenario-file values.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csv.hpp"
#include "errors.hpp"
#include "fading.hpp"
#include "link_budget.hpp"
#include "plot.hpp"
#include "scenario.hpp"
#include "sweep.hpp"

namespace irslink::cli {

enum ExitCode : int { ok = 0, usage_error = 1, domain_error = 2, io_error = 3 };

struct Options {
    std::string scenario;
    std::string out = ".";
    bool plot = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> mc_samples;
    std::optional<unsigned> workers;
    std::optional<double> alpha;
    std::optional<double> h;
    std::optional<double> tx_power_w;
    std::optional<double> carrier_hz;
    std::optional<double> theta_t_deg;
    std::optional<double> theta_r_deg;
    std::optional<double> distance;
    std::optional<double> d1;
    std::optional<double> d2;
    std::optional<double> start_m;
    std::optional<double> stop_m;
    std::optional<double> step_m;
    std::string kind;
};

/// Applies command-line overrides on top of a parsed scenario.
inline Scenario apply_overrides(Scenario sc, const Options &o)
{
    if (o.seed)
        sc.fading.seed = *o.seed;
    if (o.mc_samples)
        sc.sweep.monte_carlo_n = *o.mc_samples;
    if (o.workers)
        sc.sweep.workers = *o.workers;
    if (o.alpha)
        sc.fading.alpha = *o.alpha;
    if (o.h)
        sc.fading.mode = DeterministicFading{*o.h};
    if (o.tx_power_w)
        sc.radio.transmit_power_w = *o.tx_power_w;
    if (o.carrier_hz)
        sc.radio.carrier_frequency_hz = *o.carrier_hz;
    if (o.theta_t_deg || o.theta_r_deg) {
        detail::require(sc.panel.has_value(), "angle overrides need a scenario with an IRS panel");
        if (o.theta_t_deg) {
            validate_angle_deg(*o.theta_t_deg, "--theta-t-deg");
            sc.panel->theta_t_rad = deg_to_rad(*o.theta_t_deg);
        }
        if (o.theta_r_deg) {
            validate_angle_deg(*o.theta_r_deg, "--theta-r-deg");
            sc.panel->theta_r_rad = deg_to_rad(*o.theta_r_deg);
        }
    }
    if (o.start_m)
        sc.sweep.start_m = *o.start_m;
    if (o.stop_m)
        sc.sweep.stop_m = *o.stop_m;
    if (o.step_m)
        sc.sweep.step_m = *o.step_m;
    return sc;
}

namespace detail {

namespace fs = std::filesystem;

/// Tracks files written by one command so a failure can remove them all.
class OutputSet {
public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}

    void write(const std::string &name, const std::string &content)
    {
        const fs::path path = dir_ / name;
        write_file_atomic(path, content);
        written_.push_back(path);
    }

    void rollback()
    {
        std::error_code ec;
        for (const auto &p : written_)
            fs::remove(p, ec);
        written_.clear();
    }

    void prepare()
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec || !fs::is_directory(dir_))
            throw IoError("cannot create output directory '" + dir_.string() + "'");
    }

private:
    fs::path dir_;
    std::vector<fs::path> written_;
};

inline void print_sample(std::ostream &out, const PowerSample &s)
{
    out << "model=" << to_string(s.model);
    if (s.model == ModelTag::Conventional)
        out << " distance_m=" << format_number(s.distance_m);
    else
        out << " d1_m=" << format_number(s.d1_m) << " d2_m=" << format_number(s.d2_m);
    out << " power_w=" << format_number(s.power_w) << " power_dbm=" << format_number(s.power_dbm) << "\n";
}

inline void print_extrema(std::ostream &out, const SweepTable &table)
{
    out << "rows=" << table.rows.size();
    for (ModelTag model : {ModelTag::Conventional, ModelTag::IrsAssisted}) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        bool any = false;
        for (const auto &r : table.rows)
            if (r.sample.model == model && std::isfinite(r.sample.power_dbm)) {
                lo = std::min(lo, r.sample.power_dbm);
                hi = std::max(hi, r.sample.power_dbm);
                any = true;
            }
        if (any)
            out << " " << to_string(model) << "_max_dbm=" << format_number(hi) << " " << to_string(model)
                << "_min_dbm=" << format_number(lo);
    }
    out << "\n";
}

inline void print_summary(std::ostream &out, const ComparisonSummary &s)
{
    out << "rows=" << s.rows.size() << " conventional_max_dbm=" << format_number(s.conventional_max_dbm)
        << " conventional_min_dbm=" << format_number(s.conventional_min_dbm)
        << " irs_max_dbm=" << format_number(s.irs_max_dbm) << " irs_min_dbm=" << format_number(s.irs_min_dbm)
        << " edge_delta_db=" << format_number(s.rows.back().delta_db)
        << " crossover_m=" << (s.crossover_m ? format_number(*s.crossover_m) : std::string("none")) << "\n";
}

inline int cmd_direct(const Scenario &sc, const Options &o, std::ostream &out)
{
    const double d = o.distance ? *o.distance : sc.geometry.direct_distance();
    double watts;
    if (sc.sweep.monte_carlo_n > 0) {
        watts = expected_conventional_power(sc.radio, d, sc.fading.alpha, sc.sweep.monte_carlo_n, sc.fading.seed).mean_w;
    } else if (sc.fading.is_rayleigh()) {
        watts = conventional_rx_power(sc.radio, d, FadingSampler(sc.fading.seed).h_at(0), sc.fading.alpha);
    } else {
        watts = conventional_rx_power(sc.radio, d, std::get<DeterministicFading>(sc.fading.mode).h, sc.fading.alpha);
    }
    print_sample(out, PowerSample::conventional(d, watts));
    return ok;
}

inline int cmd_irs(const Scenario &sc, const Options &o, std::ostream &out)
{
    irslink::detail::require(sc.has_irs(), "the irs command needs a scenario with geometry.irs and panel");
    const double d1 = o.d1 ? *o.d1 : sc.geometry.bs_irs_distance();
    const double d2 = o.d2 ? *o.d2 : sc.geometry.irs_device_distance();
    print_sample(out, PowerSample::irs(d1, d2, irs_rx_power(sc.radio, *sc.panel, d1, d2)));
    return ok;
}

inline int cmd_sweep(const Scenario &sc, const Options &o, std::ostream &out, OutputSet &files)
{
    SweepKind kind = sc.sweep.kind == SweepKind::Angle ? SweepKind::Angle : SweepKind::Distance;
    if (o.kind == "distance")
        kind = SweepKind::Distance;
    else if (o.kind == "angle")
        kind = SweepKind::Angle;
    const SweepTable table = kind == SweepKind::Angle ? run_angle_sweep(sc) : run_distance_sweep(sc);
    const std::string stem = kind == SweepKind::Angle ? "angle_sweep" : "distance_sweep";
    files.prepare();
    files.write(stem + ".csv", to_csv(table));
    files.write(stem + ".meta.json", table_metadata(table));
    if (o.plot)
        files.write(stem + ".svg", render_line_svg(series_from_table(table),
                                                   kind == SweepKind::Angle ? "IRS received power by angle pair"
                                                                            : "Received power vs distance",
                                                   "distance (m)", "received power (dBm)"));
    print_extrema(out, table);
    return ok;
}

inline int cmd_coverage(const Scenario &sc, const Options &o, std::ostream &out, OutputSet &files)
{
    const SweepTable table = run_coverage_grid(sc);
    files.prepare();
    files.write("coverage.csv", to_csv(table));
    files.write("coverage.meta.json", table_metadata(table));
    if (o.plot) {
        files.write("coverage_conventional.svg",
                    render_heatmap_svg(table, ModelTag::Conventional, "Conventional received power (dBm)"));
        if (sc.has_irs())
            files.write("coverage_irs.svg", render_heatmap_svg(table, ModelTag::IrsAssisted, "IRS-assisted received power (dBm)"));
    }
    print_extrema(out, table);
    return ok;
}

inline int cmd_compare(const Scenario &sc, const Options &o, std::ostream &out, OutputSet &files)
{
    const ComparisonSummary summary = compare_models(sc);
    files.prepare();
    files.write("compare.csv", to_csv(summary));
    if (o.plot)
        files.write("compare.svg", render_line_svg(series_from_summary(summary), "Conventional vs IRS-assisted",
                                                   "IRS-device distance (m)", "received power (dBm)"));
    print_summary(out, summary);
    return ok;
}

} // namespace detail

/// Runs the CLI on `args` (program name excluded).
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Downlink received power for conventional and IRS-assisted small cells", "irslink"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_option("--scenario", o.scenario, "Scenario JSON file")->required();
    app.add_option("--out", o.out, "Output directory for CSV and plot files");
    app.add_option("--seed", o.seed, "Fading RNG seed");
    app.add_flag("--plot", o.plot, "Also write an SVG plot per sweep");
    app.add_option("--mc-samples", o.mc_samples, "Monte Carlo samples per point (0: none)");
    app.add_option("--workers", o.workers, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
    app.add_option("--alpha", o.alpha, "Path-loss exponent");
    app.add_option("--fading-h", o.h, "Deterministic fading factor h");
    app.add_option("--tx-power-w", o.tx_power_w, "Transmit power (W)");
    app.add_option("--carrier-hz", o.carrier_hz, "Carrier frequency (Hz)");

    auto *direct = app.add_subcommand("direct", "Conventional link received power");
    direct->add_option("--distance", o.distance, "BS-device distance d (m)");
    auto *irs = app.add_subcommand("irs", "IRS-assisted link received power");
    irs->add_option("--d1", o.d1, "BS-IRS distance (m)");
    irs->add_option("--d2", o.d2, "IRS-device distance (m)");
    auto *sweep = app.add_subcommand("sweep", "Received power versus distance or angle pair");
    sweep->add_option("--kind", o.kind, "distance or angle")->check(CLI::IsMember({"distance", "angle"}));
    auto *coverage = app.add_subcommand("coverage", "Received power over a 2D grid");
    auto *compare = app.add_subcommand("compare", "Conventional versus IRS-assisted comparison");
    for (auto *sub : {irs, sweep, coverage, compare}) {
        sub->add_option("--theta-t-deg", o.theta_t_deg, "IRS transmit angle (degrees)");
        sub->add_option("--theta-r-deg", o.theta_r_deg, "IRS receive angle (degrees)");
    }
    for (auto *sub : {sweep, compare}) {
        sub->add_option("--start-m", o.start_m, "Sweep start (m)");
        sub->add_option("--stop-m", o.stop_m, "Sweep stop (m)");
        sub->add_option("--step-m", o.step_m, "Sweep step (m)");
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    detail::OutputSet files(o.out);
    try {
        const Scenario sc = apply_overrides(parse_scenario(o.scenario), o);
        sc.validate();
        if (direct->parsed())
            return detail::cmd_direct(sc, o, out);
        if (irs->parsed())
            return detail::cmd_irs(sc, o, out);
        if (sweep->parsed())
            return detail::cmd_sweep(sc, o, out, files);
        if (coverage->parsed())
            return detail::cmd_coverage(sc, o, out, files);
        if (compare->parsed())
            return detail::cmd_compare(sc, o, out, files);
    } catch (const IoError &e) {
        files.rollback();
        err << "error: " << e.what() << "\n";
        return io_error;
    } catch (const ScenarioError &e) {
        files.rollback();
        err << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const DomainError &e) {
        files.rollback();
        err << "error: " << e.what() << "\n";
        return domain_error;
    }
    return usage_error;
}

inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace irslink::cli

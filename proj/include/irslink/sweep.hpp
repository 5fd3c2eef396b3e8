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

// Experiment shapes built on the link-budget core: received power versus
// distance, versus (theta_t, theta_r) pairs, over a 2D coverage grid, and a
// side-by-side comparison of both models.
//
// Geometry conventions
//   - Distance sweep, conventional model: the coordinate is the 3D distance d
//     from the base station, measured along the ray towards geometry.device.
//   - Distance and angle sweeps, IRS model: d1 is held at |BS - IRS| and the
//     coordinate is d2, measured from the IRS along the ray towards
//     geometry.device.
//   - Comparison: both models see the same device positions, placed on the
//     IRS ray at distance d2; the conventional model uses |BS - device|.
//
// Every point gets its own fading stream (seed, point index), and points are
// written by index, so the worker count never changes the output.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "fading.hpp"
#include "geometry.hpp"
#include "link_budget.hpp"
#include "units.hpp"
#include "version.hpp"

namespace irslink {

enum class SweepKind { Distance, Angle, Coverage, Compare };

inline std::string_view to_string(SweepKind kind)
{
    switch (kind) {
    case SweepKind::Distance: return "distance";
    case SweepKind::Angle: return "angle";
    case SweepKind::Coverage: return "coverage";
    case SweepKind::Compare: return "compare";
    }
    return "?";
}

/// Transmit/receive angle pair in degrees.
struct AnglePair {
    double theta_t_deg = 0.0;
    double theta_r_deg = 0.0;
    friend bool operator==(const AnglePair &, const AnglePair &) = default;
};

inline void validate_angle_deg(double deg, std::string_view what)
{
    detail::require(std::isfinite(deg) && deg >= 0.0 && deg < 90.0,
                    std::string(what) + " must lie in [0, 90) degrees, got " + detail::num(deg));
}

/// Horizontal grid at fixed device height.
struct GridSpec {
    double x_min_m = -100.0;
    double x_max_m = 100.0;
    double y_min_m = -100.0;
    double y_max_m = 100.0;
    std::uint32_t nx = 41;
    std::uint32_t ny = 41;
    double height_m = 1.5;

    double x_at(std::uint32_t i) const { return axis(x_min_m, x_max_m, nx, i); }
    double y_at(std::uint32_t j) const { return axis(y_min_m, y_max_m, ny, j); }

    friend bool operator==(const GridSpec &, const GridSpec &) = default;

private:
    static double axis(double lo, double hi, std::uint32_t n, std::uint32_t i)
    {
        if (i + 1 == n)
            return hi;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
};

struct SweepSpec {
    SweepKind kind = SweepKind::Distance;
    double start_m = 1.0;
    double stop_m = 100.0;
    double step_m = 1.0;
    std::vector<AnglePair> angle_pairs{{45.0, 45.0}, {60.0, 60.0}, {45.0, 60.0}};
    GridSpec grid;
    /// 0: no averaging. Deterministic fading uses its h; Rayleigh fading
    /// takes one draw per point.
    std::uint64_t monte_carlo_n = 0;
    unsigned workers = 1;

    /// floor((stop - start) / step) + 1, robust to representation error in
    /// the quotient.
    std::size_t point_count() const
    {
        const double q = (stop_m - start_m) / step_m;
        return static_cast<std::size_t>(std::floor(q + 1e-9)) + 1;
    }

    double point(std::size_t i) const { return start_m + static_cast<double>(i) * step_m; }

    void validate() const
    {
        switch (kind) {
        case SweepKind::Distance:
        case SweepKind::Angle:
        case SweepKind::Compare:
            detail::require(std::isfinite(start_m) && std::isfinite(stop_m), "sweep range must be finite");
            detail::require(start_m > 0.0, "sweep start must be a positive distance");
            detail::require(start_m <= stop_m, "sweep start must not exceed stop");
            detail::require(step_m > 0.0 && std::isfinite(step_m), "sweep step must be positive");
            break;
        case SweepKind::Coverage:
            detail::require(grid.nx >= 2 && grid.ny >= 2, "coverage grid needs at least 2 points per axis");
            detail::require(grid.x_min_m < grid.x_max_m && grid.y_min_m < grid.y_max_m,
                            "coverage grid extent must have min < max");
            detail::require(std::isfinite(grid.height_m), "coverage grid height must be finite");
            break;
        }
        if (kind == SweepKind::Angle) {
            detail::require(!angle_pairs.empty(), "angle sweep needs at least one angle pair");
            for (const auto &p : angle_pairs) {
                validate_angle_deg(p.theta_t_deg, "theta_t");
                validate_angle_deg(p.theta_r_deg, "theta_r");
            }
        }
    }

    friend bool operator==(const SweepSpec &, const SweepSpec &) = default;
};

/// Everything needed to run one experiment.
struct Scenario {
    RadioConfig radio;
    LinkGeometry geometry;
    std::optional<IrsPanel> panel;
    FadingSpec fading;
    SweepSpec sweep;

    bool has_irs() const { return geometry.irs.has_value() && panel.has_value(); }

    void validate() const
    {
        radio.validate();
        fading.validate();
        detail::require(geometry.base_station.finite() && geometry.device.finite(), "coordinates must be finite");
        detail::require(geometry.irs.has_value() == panel.has_value(),
                        "an IRS position requires a panel description and vice versa");
        if (geometry.irs) {
            detail::require(geometry.irs->finite(), "IRS coordinates must be finite");
            panel->validate();
        }
        sweep.validate();
    }

    friend bool operator==(const Scenario &, const Scenario &) = default;
};

struct SweepRow {
    /// Sweep coordinate: d (conventional) or d2 (IRS) for 1D sweeps.
    double distance_m = 0.0;
    double x_m = 0.0;
    double y_m = 0.0;
    double theta_t_deg = 0.0;
    double theta_r_deg = 0.0;
    PowerSample sample;
    double std_error_w = 0.0;
    /// Device coincides with the transmitter or the IRS; power is +inf.
    bool degenerate = false;

    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

struct SweepTable {
    SweepKind kind = SweepKind::Distance;
    std::vector<SweepRow> rows;
    Scenario scenario; // echo of the inputs, spec included
    std::string tool_version{version_string};

    friend bool operator==(const SweepTable &, const SweepTable &) = default;
};

struct CompareRow {
    double distance_m = 0.0; // d2 along the IRS ray
    double direct_m = 0.0;   // |BS - device|
    double conventional_w = 0.0;
    double conventional_dbm = 0.0;
    double irs_w = 0.0;
    double irs_dbm = 0.0;
    double delta_db = 0.0; // irs_dbm - conventional_dbm

    friend bool operator==(const CompareRow &, const CompareRow &) = default;
};

struct ComparisonSummary {
    std::vector<CompareRow> rows;
    double conventional_max_dbm = 0.0;
    double conventional_min_dbm = 0.0;
    double irs_max_dbm = 0.0;
    double irs_min_dbm = 0.0;
    /// Where delta_db first changes sign, linearly interpolated.
    std::optional<double> crossover_m;

    friend bool operator==(const ComparisonSummary &, const ComparisonSummary &) = default;
};

namespace detail {

/// Runs fn(i) for i in [0, n) on up to `workers` threads. If any call
/// throws, the exception from the lowest index is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn &&fn)
{
    const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
    std::vector<std::exception_ptr> errors(n);
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        run_range(0, n);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo < hi)
                pool.emplace_back(run_range, lo, hi);
        }
    }
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

inline std::string format_coord(double v) { return num(v); }

/// Re-raises a core DomainError with the offending sweep coordinate attached.
template <typename Fn>
auto at_coordinate(const std::string &where, Fn &&fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const DomainError &e) {
        throw DomainError(std::string(e.what()) + " (at " + where + ")");
    }
}

struct ConventionalValue {
    double watts = 0.0;
    double std_error_w = 0.0;
};

/// Conventional power at distance d under the scenario's fading settings,
/// drawing from stream `stream`.
inline ConventionalValue conventional_under_fading(const Scenario &sc, double d, std::uint64_t stream)
{
    const double alpha = sc.fading.alpha;
    if (sc.sweep.monte_carlo_n > 0) {
        const auto est = expected_conventional_power(sc.radio, d, alpha, sc.sweep.monte_carlo_n, sc.fading.seed, stream);
        return {est.mean_w, est.std_error_w};
    }
    if (sc.fading.is_rayleigh()) {
        const FadingSampler sampler(sc.fading.seed, stream);
        return {conventional_rx_power(sc.radio, d, sampler.h_at(0), alpha), 0.0};
    }
    return {conventional_rx_power(sc.radio, d, std::get<DeterministicFading>(sc.fading.mode).h, alpha), 0.0};
}

/// Copy of the scenario with the sweep kind forced to `kind`, validated.
inline Scenario prepared(const Scenario &scenario, SweepKind kind)
{
    Scenario sc = scenario;
    sc.sweep.kind = kind;
    sc.validate();
    return sc;
}

inline IrsPanel with_angles(IrsPanel panel, const AnglePair &pair)
{
    validate_angle_deg(pair.theta_t_deg, "theta_t");
    validate_angle_deg(pair.theta_r_deg, "theta_r");
    panel.theta_t_rad = deg_to_rad(pair.theta_t_deg);
    panel.theta_r_rad = deg_to_rad(pair.theta_r_deg);
    return panel;
}

} // namespace detail

/// Received power versus distance. One conventional row per point, followed
/// by one IRS row per point when the scenario has an IRS.
inline SweepTable run_distance_sweep(const Scenario &input)
{
    const Scenario scenario = detail::prepared(input, SweepKind::Distance);
    const SweepSpec &spec = scenario.sweep;
    const std::size_t n = spec.point_count();
    const bool irs = scenario.has_irs();
    const std::size_t per_point = irs ? 2 : 1;

    SweepTable table{SweepKind::Distance, std::vector<SweepRow>(n * per_point), scenario};
    const double d1 = irs ? scenario.geometry.bs_irs_distance() : 0.0;
    const double theta_t = irs ? rad_to_deg(scenario.panel->theta_t_rad) : 0.0;
    const double theta_r = irs ? rad_to_deg(scenario.panel->theta_r_rad) : 0.0;

    detail::parallel_for(n, spec.workers, [&](std::size_t i) {
        const double r = spec.point(i);
        detail::at_coordinate("distance_m=" + detail::format_coord(r), [&] {
            const auto conv = detail::conventional_under_fading(scenario, r, i);
            SweepRow &row = table.rows[i * per_point];
            row.distance_m = r;
            row.sample = PowerSample::conventional(r, conv.watts);
            row.std_error_w = conv.std_error_w;
            if (irs) {
                SweepRow &irow = table.rows[i * per_point + 1];
                irow.distance_m = r;
                irow.theta_t_deg = theta_t;
                irow.theta_r_deg = theta_r;
                irow.sample = PowerSample::irs(d1, r, irs_rx_power(scenario.radio, *scenario.panel, d1, r));
            }
        });
    });
    return table;
}

/// IRS received power over the distance axis, one section per angle pair in
/// the order given.
inline SweepTable run_angle_sweep(const Scenario &input)
{
    const Scenario scenario = detail::prepared(input, SweepKind::Angle);
    detail::require(scenario.has_irs(), "angle sweep requires an IRS in the scenario");
    const SweepSpec &spec = scenario.sweep;
    detail::require(!spec.angle_pairs.empty(), "angle sweep needs at least one angle pair");
    const std::size_t n = spec.point_count();
    const std::size_t pairs = spec.angle_pairs.size();
    const double d1 = scenario.geometry.bs_irs_distance();

    std::vector<IrsPanel> panels;
    for (const auto &p : spec.angle_pairs)
        panels.push_back(detail::with_angles(*scenario.panel, p));

    SweepTable table{SweepKind::Angle, std::vector<SweepRow>(n * pairs), scenario};
    detail::parallel_for(n * pairs, spec.workers, [&](std::size_t k) {
        const std::size_t p = k / n;
        const double r = spec.point(k % n);
        const AnglePair &pair = spec.angle_pairs[p];
        detail::at_coordinate("theta_t_deg=" + detail::format_coord(pair.theta_t_deg) + ", theta_r_deg="
                                  + detail::format_coord(pair.theta_r_deg) + ", distance_m=" + detail::format_coord(r),
                              [&] {
                                  SweepRow &row = table.rows[k];
                                  row.distance_m = r;
                                  row.theta_t_deg = pair.theta_t_deg;
                                  row.theta_r_deg = pair.theta_r_deg;
                                  row.sample = PowerSample::irs(d1, r, irs_rx_power(scenario.radio, panels[p], d1, r));
                              });
    });
    return table;
}

/// Received power on an nx x ny grid at the configured device height, rows
/// ordered y-major. Points on top of the base station or the IRS produce a
/// flagged row with +inf power instead of failing the grid.
inline SweepTable run_coverage_grid(const Scenario &scenario)
{
    const Scenario sc = detail::prepared(scenario, SweepKind::Coverage);
    const GridSpec &grid = sc.sweep.grid;
    const std::size_t points = static_cast<std::size_t>(grid.nx) * grid.ny;
    const bool irs = sc.has_irs();
    const std::size_t per_point = irs ? 2 : 1;
    const double d1 = irs ? sc.geometry.bs_irs_distance() : 0.0;
    const double inf = std::numeric_limits<double>::infinity();

    SweepTable table{SweepKind::Coverage, std::vector<SweepRow>(points * per_point), sc};
    detail::parallel_for(points, sc.sweep.workers, [&](std::size_t k) {
        const auto ix = static_cast<std::uint32_t>(k % grid.nx);
        const auto iy = static_cast<std::uint32_t>(k / grid.nx);
        const Point3 p{grid.x_at(ix), grid.y_at(iy), grid.height_m};
        detail::at_coordinate("x_m=" + detail::format_coord(p.x) + ", y_m=" + detail::format_coord(p.y), [&] {
            SweepRow &row = table.rows[k * per_point];
            row.x_m = p.x;
            row.y_m = p.y;
            const double d = euclidean_distance(sc.geometry.base_station, p);
            row.distance_m = d;
            if (d > 0.0) {
                const auto conv = detail::conventional_under_fading(sc, d, k);
                row.sample = PowerSample::conventional(d, conv.watts);
                row.std_error_w = conv.std_error_w;
            } else {
                row.sample = {ModelTag::Conventional, d, 0.0, 0.0, inf, inf};
                row.degenerate = true;
            }
            if (irs) {
                SweepRow &irow = table.rows[k * per_point + 1];
                irow.x_m = p.x;
                irow.y_m = p.y;
                irow.theta_t_deg = rad_to_deg(sc.panel->theta_t_rad);
                irow.theta_r_deg = rad_to_deg(sc.panel->theta_r_rad);
                const double d2 = euclidean_distance(*sc.geometry.irs, p);
                irow.distance_m = d2;
                if (d2 > 0.0 && d1 > 0.0) {
                    irow.sample = PowerSample::irs(d1, d2, irs_rx_power(sc.radio, *sc.panel, d1, d2));
                } else {
                    irow.sample = {ModelTag::IrsAssisted, d2, d1, d2, inf, inf};
                    irow.degenerate = true;
                }
            }
        });
    });
    return table;
}

/// Sign-change crossover of delta_db, interpolated between neighbours.
inline std::optional<double> find_crossover(const std::vector<CompareRow> &rows)
{
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double a = rows[i - 1].delta_db;
        const double b = rows[i].delta_db;
        if (a == 0.0)
            return rows[i - 1].distance_m;
        if ((a < 0.0) != (b < 0.0) || b == 0.0) {
            const double t = a / (a - b);
            return rows[i - 1].distance_m + t * (rows[i].distance_m - rows[i - 1].distance_m);
        }
    }
    return std::nullopt;
}

/// Both models at identical device positions along the IRS ray, with
/// per-row dB difference and per-model extrema.
inline ComparisonSummary compare_models(const Scenario &input)
{
    const Scenario scenario = detail::prepared(input, SweepKind::Compare);
    detail::require(scenario.has_irs(), "comparison requires an IRS in the scenario");
    const SweepSpec &spec = scenario.sweep;
    const std::size_t n = spec.point_count();
    detail::require(n > 0, "comparison sweep is empty");

    const Point3 irs_pos = *scenario.geometry.irs;
    const double d1 = scenario.geometry.bs_irs_distance();

    ComparisonSummary out;
    out.rows.resize(n);
    detail::parallel_for(n, spec.workers, [&](std::size_t i) {
        const double r = spec.point(i);
        detail::at_coordinate("distance_m=" + detail::format_coord(r), [&] {
            const Point3 device = point_along_ray(irs_pos, scenario.geometry.device, r);
            const double d = euclidean_distance(scenario.geometry.base_station, device);
            const auto conv = detail::conventional_under_fading(scenario, d, i);
            const double irs_w = irs_rx_power(scenario.radio, *scenario.panel, d1, r);
            CompareRow &row = out.rows[i];
            row.distance_m = r;
            row.direct_m = d;
            row.conventional_w = conv.watts;
            row.conventional_dbm = watts_to_dbm(conv.watts);
            row.irs_w = irs_w;
            row.irs_dbm = watts_to_dbm(irs_w);
            row.delta_db = row.irs_dbm - row.conventional_dbm;
        });
    });

    auto by_conv = [](const CompareRow &a, const CompareRow &b) { return a.conventional_dbm < b.conventional_dbm; };
    auto by_irs = [](const CompareRow &a, const CompareRow &b) { return a.irs_dbm < b.irs_dbm; };
    const auto [cmin, cmax] = std::minmax_element(out.rows.begin(), out.rows.end(), by_conv);
    const auto [imin, imax] = std::minmax_element(out.rows.begin(), out.rows.end(), by_irs);
    out.conventional_min_dbm = cmin->conventional_dbm;
    out.conventional_max_dbm = cmax->conventional_dbm;
    out.irs_min_dbm = imin->irs_dbm;
    out.irs_max_dbm = imax->irs_dbm;
    out.crossover_m = find_crossover(out.rows);
    return out;
}

} // namespace irslink

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

#pragma once

#include <cmath>
#include <optional>

#include "errors.hpp"

namespace irslink {

/// Cartesian position in meters.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

    friend bool operator==(const Point3 &, const Point3 &) = default;
};

inline double euclidean_distance(const Point3 &a, const Point3 &b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Point at `distance` meters from `origin` along the direction towards `toward`.
inline Point3 point_along_ray(const Point3 &origin, const Point3 &toward, double distance)
{
    const double len = euclidean_distance(origin, toward);
    detail::require(len > 0.0, "ray direction is undefined: anchor coincides with origin");
    const double s = distance / len;
    return {origin.x + (toward.x - origin.x) * s,
            origin.y + (toward.y - origin.y) * s,
            origin.z + (toward.z - origin.z) * s};
}

/// Positions of the base station, the optional IRS and the device.
struct LinkGeometry {
    Point3 base_station;
    std::optional<Point3> irs;
    Point3 device;

    /// Base station to device.
    double direct_distance() const { return euclidean_distance(base_station, device); }

    /// Base station to IRS (first hop).
    double bs_irs_distance() const
    {
        detail::require(irs.has_value(), "geometry has no IRS");
        return euclidean_distance(base_station, *irs);
    }

    /// IRS to device (second hop).
    double irs_device_distance() const
    {
        detail::require(irs.has_value(), "geometry has no IRS");
        return euclidean_distance(*irs, device);
    }

    friend bool operator==(const LinkGeometry &, const LinkGeometry &) = default;
};

} // namespace irslink

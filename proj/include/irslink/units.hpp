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
#include <limits>
#include <numbers>

namespace irslink {

inline constexpr double speed_of_light_mps = 299792458.0;
inline constexpr double pi = std::numbers::pi;

/// Power in dBm. Zero or negative watts map to -infinity, never NaN.
inline double watts_to_dbm(double watts)
{
    if (!(watts > 0.0))
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(watts / 0.001);
}

inline double dbm_to_watts(double dbm)
{
    return 0.001 * std::pow(10.0, dbm / 10.0);
}

constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

} // namespace irslink

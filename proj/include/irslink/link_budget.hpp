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

// Closed-form downlink received power for a conventional small-cell link and
// for a base station -> IRS -> device double-hop link.
//
// All functions are pure; inputs are validated on every call and violations
// raise DomainError.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "units.hpp"

namespace irslink {

struct RadioConfig {
    double carrier_frequency_hz = 0.0;
    double transmit_power_w = 0.0;
    double bandwidth_hz = 0.0; // stored for reporting, not used by either model
    double tx_gain_linear = 1.0;
    double rx_gain_linear = 1.0;

    void validate() const
    {
        detail::require(carrier_frequency_hz > 0.0 && std::isfinite(carrier_frequency_hz),
                        "carrier frequency must be positive");
        detail::require(transmit_power_w > 0.0 && std::isfinite(transmit_power_w),
                        "transmit power must be positive");
        detail::require(bandwidth_hz > 0.0 && std::isfinite(bandwidth_hz), "bandwidth must be positive");
        detail::require(tx_gain_linear > 0.0 && std::isfinite(tx_gain_linear), "tx gain must be positive");
        detail::require(rx_gain_linear > 0.0 && std::isfinite(rx_gain_linear), "rx gain must be positive");
    }

    friend bool operator==(const RadioConfig &, const RadioConfig &) = default;
};

/// Reflecting panel of M x N elements, each d_x by d_y meters.
/// Angles are in radians and must lie in [0, pi/2).
struct IrsPanel {
    std::uint32_t elements_m = 1;
    std::uint32_t elements_n = 1;
    double element_len_x_m = 0.0;
    double element_len_y_m = 0.0;
    double reflection_coeff = 1.0;
    double theta_t_rad = 0.0;
    double theta_r_rad = 0.0;

    void validate() const
    {
        detail::require(elements_m >= 1 && elements_n >= 1, "IRS element counts must be >= 1");
        detail::require(element_len_x_m > 0.0 && std::isfinite(element_len_x_m), "IRS element length must be positive");
        detail::require(element_len_y_m > 0.0 && std::isfinite(element_len_y_m), "IRS element width must be positive");
        detail::require(reflection_coeff > 0.0 && reflection_coeff <= 1.0, "reflection coefficient must lie in (0, 1]");
        detail::require(theta_t_rad >= 0.0 && theta_t_rad < pi / 2.0, "transmit angle must lie in [0, 90) degrees");
        detail::require(theta_r_rad >= 0.0 && theta_r_rad < pi / 2.0, "receive angle must lie in [0, 90) degrees");
    }

    friend bool operator==(const IrsPanel &, const IrsPanel &) = default;
};

inline double wavelength(const RadioConfig &cfg)
{
    detail::require(cfg.carrier_frequency_hz > 0.0, "carrier frequency must be positive");
    return speed_of_light_mps / cfg.carrier_frequency_hz;
}

/// P_t * lambda * h / ((4 pi)^2 * d^alpha).
///
/// The wavelength enters linearly, not squared as in the usual Friis form.
/// This is the model as published and is kept deliberately.
inline double conventional_rx_power(const RadioConfig &cfg, double d, double h, double alpha)
{
    cfg.validate();
    detail::require(d > 0.0 && std::isfinite(d), "direct distance must be positive, got " + detail::num(d));
    detail::require(h >= 0.0 && std::isfinite(h), "fading factor h must be non-negative");
    detail::require(alpha >= 1.0 && std::isfinite(alpha), "path-loss exponent must be >= 1");
    const double four_pi = 4.0 * pi;
    return cfg.transmit_power_w * wavelength(cfg) * h / (four_pi * four_pi * std::pow(d, alpha));
}

/// Scattering gain of one element: 4 pi d_x d_y / lambda^2.
inline double irs_scattering_gain(const IrsPanel &panel, double lambda)
{
    detail::require(lambda > 0.0 && std::isfinite(lambda), "wavelength must be positive");
    return 4.0 * pi * panel.element_len_x_m * panel.element_len_y_m / (lambda * lambda);
}

/// P_t G_t G_r G M^2 N^2 d_x d_y lambda^2 cos(theta_t) cos(theta_r) A^2 / (64 pi^3 (d1 d2)^2)
///
/// G is always derived from the panel at the configured wavelength. The
/// expression is symmetric under swapping (d1, theta_t) with (d2, theta_r),
/// bit for bit.
inline double irs_rx_power(const RadioConfig &cfg, const IrsPanel &panel, double d1, double d2)
{
    cfg.validate();
    panel.validate();
    detail::require(d1 > 0.0 && std::isfinite(d1), "BS-IRS distance d1 must be positive, got " + detail::num(d1));
    detail::require(d2 > 0.0 && std::isfinite(d2), "IRS-device distance d2 must be positive, got " + detail::num(d2));

    const double lambda = wavelength(cfg);
    const double gain = irs_scattering_gain(panel, lambda);
    const double m = panel.elements_m;
    const double n = panel.elements_n;
    const double a = panel.reflection_coeff;
    const double cos_product = std::cos(panel.theta_t_rad) * std::cos(panel.theta_r_rad);
    const double hops = d1 * d2;

    const double numerator = cfg.transmit_power_w * cfg.tx_gain_linear * cfg.rx_gain_linear * gain
                             * (m * m) * (n * n) * panel.element_len_x_m * panel.element_len_y_m
                             * (lambda * lambda) * cos_product * (a * a);
    return numerator / (64.0 * pi * pi * pi * (hops * hops));
}

enum class ModelTag { Conventional, IrsAssisted };

inline std::string_view to_string(ModelTag tag)
{
    return tag == ModelTag::Conventional ? "conventional" : "irs";
}

/// One evaluated point. For the conventional model `distance_m` is d and
/// d1/d2 are zero; for the IRS model `distance_m` is d2.
struct PowerSample {
    ModelTag model = ModelTag::Conventional;
    double distance_m = 0.0;
    double d1_m = 0.0;
    double d2_m = 0.0;
    double power_w = 0.0;
    double power_dbm = 0.0;

    static PowerSample conventional(double d, double watts)
    {
        return {ModelTag::Conventional, d, 0.0, 0.0, watts, watts_to_dbm(watts)};
    }

    static PowerSample irs(double d1, double d2, double watts)
    {
        return {ModelTag::IrsAssisted, d2, d1, d2, watts, watts_to_dbm(watts)};
    }

    friend bool operator==(const PowerSample &, const PowerSample &) = default;
};

} // namespace irslink

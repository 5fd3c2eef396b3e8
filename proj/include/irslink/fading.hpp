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

// Rayleigh fading on the direct link: the power factor h is exponential with
// unit mean, drawn by inverse CDF from a counter-based SplitMix64 stream.
//
// A stream is addressed by (seed, stream id), and sample i of a stream is a
// pure function of (seed, stream id, i). Sweeps give every grid point its
// own stream id, so results never depend on evaluation order or thread count.

#pragma once

#include <cmath>
#include <cstdint>
#include <variant>

#include "errors.hpp"
#include "link_budget.hpp"

namespace irslink {

namespace rng {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t stream_gamma = 0xD1B54A32D192ED03ULL;

/// SplitMix64 output function (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream)
{
    return mix64(mix64(seed + golden_gamma) + (stream + 1) * stream_gamma);
}

/// 64 random bits at position `counter` of the stream with key `key`.
constexpr std::uint64_t bits_at(std::uint64_t key, std::uint64_t counter)
{
    return mix64(key + (counter + 1) * golden_gamma);
}

/// Maps 64 bits onto the 2^53-point grid of (0, 1]. Never returns 0.
constexpr double unit_interval_open_closed(std::uint64_t bits)
{
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

} // namespace rng

/// Inverse CDF of the unit-mean exponential: h = -ln(u), u in (0, 1].
inline double h_from_uniform(double u)
{
    detail::require(u > 0.0 && u <= 1.0, "uniform variate must lie in (0, 1]");
    return 0.0 - std::log(u); // 0.0 - x keeps h = +0 at u = 1
}

class FadingSampler {
public:
    explicit FadingSampler(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), key_(rng::stream_key(seed, stream)) {}

    double sample_h() { return h_from_uniform(uniform_at(position_++)); }

    /// Sample `i` of this stream without touching the position.
    double h_at(std::uint64_t i) const { return h_from_uniform(uniform_at(i)); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    std::uint64_t position() const { return position_; }

    /// Independent child stream; used for per-grid-point draws.
    FadingSampler child(std::uint64_t index) const { return FadingSampler(seed_, index); }

private:
    double uniform_at(std::uint64_t i) const { return rng::unit_interval_open_closed(rng::bits_at(key_, i)); }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t position_ = 0;
};

struct DeterministicFading {
    double h = 1.0;
    friend bool operator==(const DeterministicFading &, const DeterministicFading &) = default;
};

struct RayleighUnitMean {
    friend bool operator==(const RayleighUnitMean &, const RayleighUnitMean &) = default;
};

struct FadingSpec {
    std::variant<DeterministicFading, RayleighUnitMean> mode = DeterministicFading{};
    double alpha = 2.0;
    std::uint64_t seed = 0;

    bool is_rayleigh() const { return std::holds_alternative<RayleighUnitMean>(mode); }

    void validate() const
    {
        if (const auto *det = std::get_if<DeterministicFading>(&mode))
            detail::require(det->h >= 0.0 && std::isfinite(det->h), "deterministic h must be non-negative");
        detail::require(alpha >= 1.0 && std::isfinite(alpha), "path-loss exponent alpha must be >= 1");
    }

    friend bool operator==(const FadingSpec &, const FadingSpec &) = default;
};

struct MonteCarloEstimate {
    double mean_w = 0.0;
    double std_error_w = 0.0;
    std::uint64_t n_samples = 0;

    friend bool operator==(const MonteCarloEstimate &, const MonteCarloEstimate &) = default;
};

/// Monte Carlo estimate of E[P_r] over h for the conventional link, using
/// samples 0..n-1 of stream (seed, stream). Standard error uses the unbiased
/// sample variance and is 0 for n = 1.
inline MonteCarloEstimate expected_conventional_power(const RadioConfig &cfg, double d, double alpha,
                                                      std::uint64_t n, std::uint64_t seed,
                                                      std::uint64_t stream = 0)
{
    detail::require(n >= 1, "Monte Carlo sample count must be >= 1");
    FadingSampler sampler(seed, stream);
    // Welford running moments, strictly sequential in sample order.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double p = conventional_rx_power(cfg, d, sampler.sample_h(), alpha);
        const double delta = p - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (p - mean);
    }
    const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

} // namespace irslink

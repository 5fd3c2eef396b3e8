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

#include <cstdio>
#include <stdexcept>
#include <string>

namespace irslink {

/// Raised when a model input lies outside the domain of the formula
/// (non-positive distance, angle at or beyond 90 degrees, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by the scenario reader. `field()` is the dotted path of the
/// offending key, e.g. "radio.transmit_power_w".
class ScenarioError : public std::invalid_argument {
public:
    ScenarioError(std::string field, const std::string &what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Short human-readable rendering of a number for error messages.
inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void require(bool ok, const std::string &msg)
{
    if (!ok)
        throw DomainError(msg);
}

} // namespace detail

} // namespace irslink

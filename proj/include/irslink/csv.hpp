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

// CSV emission. Column order per table kind is part of the file format and
// must not change:
//
//   distance  distance_m,model,power_w,power_dbm
//   angle     theta_t_deg,theta_r_deg,distance_m,model,power_w,power_dbm
//   coverage  x_m,y_m,model,power_w,power_dbm,flag
//   compare   distance_m,direct_m,conventional_w,conventional_dbm,irs_w,irs_dbm,delta_db
//
// Numbers use 12 significant digits ("%.12g"); infinities print as inf and
// -inf. Lines end in a bare '\n'.

#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "sweep.hpp"

namespace irslink {

inline std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string_view csv_header(SweepKind kind)
{
    switch (kind) {
    case SweepKind::Distance: return "distance_m,model,power_w,power_dbm";
    case SweepKind::Angle: return "theta_t_deg,theta_r_deg,distance_m,model,power_w,power_dbm";
    case SweepKind::Coverage: return "x_m,y_m,model,power_w,power_dbm,flag";
    case SweepKind::Compare:
        return "distance_m,direct_m,conventional_w,conventional_dbm,irs_w,irs_dbm,delta_db";
    }
    return "";
}

inline std::string to_csv(const SweepTable &table)
{
    std::string out(csv_header(table.kind));
    out += '\n';
    for (const SweepRow &row : table.rows) {
        const std::string model(to_string(row.sample.model));
        const std::string watts = format_number(row.sample.power_w);
        const std::string dbm = format_number(row.sample.power_dbm);
        switch (table.kind) {
        case SweepKind::Distance:
        case SweepKind::Compare:
            out += format_number(row.distance_m) + ',' + model + ',' + watts + ',' + dbm;
            break;
        case SweepKind::Angle:
            out += format_number(row.theta_t_deg) + ',' + format_number(row.theta_r_deg) + ','
                   + format_number(row.distance_m) + ',' + model + ',' + watts + ',' + dbm;
            break;
        case SweepKind::Coverage:
            out += format_number(row.x_m) + ',' + format_number(row.y_m) + ',' + model + ',' + watts + ',' + dbm
                   + ',' + (row.degenerate ? "degenerate" : "ok");
            break;
        }
        out += '\n';
    }
    return out;
}

inline std::string to_csv(const ComparisonSummary &summary)
{
    std::string out(csv_header(SweepKind::Compare));
    out += '\n';
    for (const CompareRow &r : summary.rows) {
        out += format_number(r.distance_m) + ',' + format_number(r.direct_m) + ',' + format_number(r.conventional_w)
               + ',' + format_number(r.conventional_dbm) + ',' + format_number(r.irs_w) + ','
               + format_number(r.irs_dbm) + ',' + format_number(r.delta_db) + '\n';
    }
    return out;
}

/// Writes `content` to `<path>.tmp` and renames it over `path`. On any
/// failure the temporary is removed and IoError is thrown.
inline void write_file_atomic(const std::filesystem::path &path, std::string_view content)
{
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (out)
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.close();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("cannot write '" + path.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place at '" + path.string() + "'");
    }
}

} // namespace irslink

// Copyright 2026 The hyperrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERREC_EXPCLI_PLOT_HPP_
#define HYPERREC_EXPCLI_PLOT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperrec/expcli/config.hpp"

namespace hyperrec::expcli {

// One raster row: members of a window in 1..horizon.
struct RasterRow {
  std::string label;
  std::uint64_t horizon = 0;
  // (start, length) runs of members.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
  // Longest progression found, as (start, step, terms).
  std::optional<std::array<std::uint64_t, 3>> progression;
};

// Rows for every window in the report body lines, in report order.
std::vector<RasterRow> raster_rows(const std::vector<Json>& lines);

// Return-time raster, x-axis n; runs drawn as bars, progressions as rings.
std::string render_svg(const std::vector<RasterRow>& rows);

// Reads a JSONL report and writes the SVG. Throws std::runtime_error when
// the report is missing or malformed.
void plot_report(const std::string& report_path, const std::string& svg_path);

}  // namespace hyperrec::expcli

#endif  // HYPERREC_EXPCLI_PLOT_HPP_

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

#include "hyperrec/expcli/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hyperrec/recurrence.hpp"

namespace hyperrec::expcli {

namespace {

constexpr double kLeft = 220.0;
constexpr double kWidth = 720.0;
constexpr double kTop = 48.0;
constexpr double kRow = 30.0;
constexpr double kBar = 14.0;
// Longest window scanned for progressions when the report carries none.
constexpr std::size_t kMaxScanMembers = 5000;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

RasterRow make_row(std::string label, const Json& window, const Json& progression) {
  RasterRow row;
  row.label = std::move(label);
  row.horizon = window.at("horizon").get<std::uint64_t>();
  std::vector<std::uint64_t> members;
  for (const auto& r : window.at("runs")) {
    const auto start = r.at(0).get<std::uint64_t>();
    const auto len = r.at(1).get<std::uint64_t>();
    row.runs.emplace_back(start, len);
    if (members.size() <= kMaxScanMembers) {
      for (std::uint64_t k = 0; k < len && members.size() <= kMaxScanMembers; ++k) {
        members.push_back(start + k);
      }
    }
  }
  if (progression.is_object()) {
    row.progression = std::array<std::uint64_t, 3>{progression.at("start").get<std::uint64_t>(),
                                                   progression.at("step").get<std::uint64_t>(),
                                                   progression.at("terms").get<std::uint64_t>()};
  } else if (members.size() >= 3 && members.size() <= kMaxScanMembers) {
    const ReturnWindow w(row.horizon, members, Semantics::kWindowed);
    for (std::uint64_t len = kMaxApLength; len >= 3; --len) {
      if (const auto p = find_progression(w, len)) {
        row.progression = std::array<std::uint64_t, 3>{p->first, p->second, len};
        break;
      }
    }
  }
  return row;
}

}  // namespace

std::vector<RasterRow> raster_rows(const std::vector<Json>& lines) {
  std::vector<RasterRow> rows;
  for (const auto& line : lines) {
    if (line.value("kind", "") != "analysis") continue;
    const std::string name = line.value("name", "");
    const Json& result = line.contains("result") ? line.at("result") : Json::object();
    if (result.contains("window")) {
      rows.push_back(make_row(name, result.at("window"),
                              result.value("progression", Json(nullptr))));
    }
    if (result.contains("probes")) {
      for (const auto& p : result.at("probes")) {
        rows.push_back(make_row(name + " " + p.value("probe", ""), p.at("window"), nullptr));
      }
    }
  }
  return rows;
}

std::string render_svg(const std::vector<RasterRow>& rows) {
  const std::size_t shown = std::max<std::size_t>(rows.size(), 1);
  const double height = kTop + kRow * static_cast<double>(shown) + 40.0;
  const double width = kLeft + kWidth + 40.0;
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                  "\" height=\"" + num(height) + "\" font-family=\"monospace\" font-size=\"11\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Legend.
  s += "<rect x=\"" + num(kLeft) + "\" y=\"12\" width=\"16\" height=\"10\" fill=\"#1f4e99\"/>\n";
  s += "<text x=\"" + num(kLeft + 22) + "\" y=\"21\">return time</text>\n";
  s += "<circle cx=\"" + num(kLeft + 130) + "\" cy=\"17\" r=\"4\" fill=\"none\" "
       "stroke=\"#d9480f\" stroke-width=\"1.5\"/>\n";
  s += "<text x=\"" + num(kLeft + 140) + "\" y=\"21\">arithmetic progression</text>\n";
  if (rows.empty()) {
    s += "<text x=\"" + num(kLeft) + "\" y=\"" + num(kTop + kRow * 0.6) +
         "\">no windows in report</text>\n";
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double y = kTop + kRow * static_cast<double>(i);
    const double h = static_cast<double>(std::max<std::uint64_t>(r.horizon, 1));
    auto xpos = [&](double n) { return kLeft + (n - 1.0) / h * kWidth; };
    s += "<text x=\"8\" y=\"" + num(y + kBar - 2) + "\">" + escape(r.label) + "</text>\n";
    s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y + kBar) + "\" x2=\"" +
         num(kLeft + kWidth) + "\" y2=\"" + num(y + kBar) + "\" stroke=\"#999\"/>\n";
    for (const auto& [start, len] : r.runs) {
      const double x0 = xpos(static_cast<double>(start));
      const double w = std::max(static_cast<double>(len) / h * kWidth, 0.75);
      s += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
           "\" height=\"" + num(kBar) + "\" fill=\"#1f4e99\"/>\n";
    }
    if (r.runs.empty()) {
      s += "<text x=\"" + num(kLeft + 4) + "\" y=\"" + num(y + kBar - 3) +
           "\" fill=\"#999\">(empty)</text>\n";
    }
    if (r.progression) {
      const auto [start, step, terms] = *r.progression;
      for (std::uint64_t k = 0; k < terms; ++k) {
        const double x = xpos(static_cast<double>(start + k * step)) + 0.5 * std::min(kWidth / h, 4.0);
        s += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y + kBar / 2) +
             "\" r=\"4\" fill=\"none\" stroke=\"#d9480f\" stroke-width=\"1.5\"/>\n";
      }
      s += "<text x=\"" + num(kLeft + kWidth + 4) + "\" y=\"" + num(y + kBar - 2) +
           "\" fill=\"#d9480f\">" + std::to_string(terms) + "</text>\n";
    }
  }

  // Axis labelled by the first row's horizon, or 1 when there are no rows.
  const std::uint64_t horizon = rows.empty() ? 1 : rows.front().horizon;
  const double axis_y = kTop + kRow * static_cast<double>(shown) + 4.0;
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(axis_y) + "\" x2=\"" + num(kLeft + kWidth) +
       "\" y2=\"" + num(axis_y) + "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const std::uint64_t n = std::max<std::uint64_t>(1, horizon * static_cast<std::uint64_t>(k) / 4);
    const double x = kLeft + (static_cast<double>(n) - 1.0) /
                                 static_cast<double>(std::max<std::uint64_t>(horizon, 1)) * kWidth;
    s += "<line x1=\"" + num(x) + "\" y1=\"" + num(axis_y) + "\" x2=\"" + num(x) + "\" y2=\"" +
         num(axis_y + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(x) + "\" y=\"" + num(axis_y + 17) + "\" text-anchor=\"middle\">" +
         std::to_string(n) + "</text>\n";
  }
  s += "<text x=\"" + num(kLeft + kWidth + 8) + "\" y=\"" + num(axis_y + 4) + "\">n</text>\n";
  s += "</svg>\n";
  return s;
}

void plot_report(const std::string& report_path, const std::string& svg_path) {
  std::ifstream in(report_path);
  if (!in) throw std::runtime_error(report_path + ": cannot read report");
  std::vector<Json> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      lines.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw std::runtime_error(report_path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  const std::string svg = render_svg(raster_rows(lines));
  std::ofstream out(svg_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + svg_path);
  out << svg;
}

}  // namespace hyperrec::expcli

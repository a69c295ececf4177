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

#ifndef HYPERREC_EXPCLI_CONFIG_HPP_
#define HYPERREC_EXPCLI_CONFIG_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperrec/space.hpp"

namespace hyperrec::expcli {

using Json = nlohmann::ordered_json;

// Validation failure, message prefixed with "source:line:column: ".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Upper limits applied at validation time.
inline constexpr std::uint64_t kMaxHorizon = 10'000'000;
inline constexpr std::size_t kMaxSamplingBudget = 1'000'000;
inline constexpr std::size_t kMaxSweep = 10'000;

struct CatalogEntry {
  std::string name;
  std::string parameters;
  std::string summary;
};

const std::vector<CatalogEntry>& catalog();

struct AnalysisResult {
  // Overall yes/no of the analysis when it has one.
  std::optional<bool> holds;
  // "exact", "windowed", "witnessed" or "probed".
  std::string semantics;
  // One-line digest for the CSV summary.
  std::string headline;
  // False when independent checks inside the analysis disagree.
  bool consistent = true;
  Json result;
};

struct Analysis {
  std::string name;
  std::string op;
  std::function<AnalysisResult()> run;
};

struct OutputSpec {
  std::string report = "report.jsonl";
  std::string csv = "summary.csv";
  // Empty: no plot.
  std::string plot;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  // Parsed config with the effective seed; re-running it reproduces the report.
  Json echo;
  std::string system;
  std::vector<Analysis> analyses;
  OutputSpec output;
};

// Parses and validates. Analyses are bound to their parameters but not run.
ExperimentConfig parse_config(std::string_view text, const std::string& source,
                              std::optional<std::uint64_t> seed_override = std::nullopt);
ExperimentConfig load_config(const std::string& path,
                             std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace hyperrec::expcli

#endif  // HYPERREC_EXPCLI_CONFIG_HPP_

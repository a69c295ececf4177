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

#ifndef HYPERREC_EXPCLI_REPORT_HPP_
#define HYPERREC_EXPCLI_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hyperrec/acceptance.hpp"
#include "hyperrec/expcli/config.hpp"
#include "hyperrec/oracle.hpp"
#include "hyperrec/recurrence.hpp"

namespace hyperrec::expcli {

inline constexpr const char* kToolName = "hyperrec";
inline constexpr const char* kToolVersion = "0.1.0";

Json window_json(const ReturnWindow& w);
Json verdict_json(const FamilySpec& spec, const FamilyVerdict& v);
Json equivalence_json(const EquivalenceReport& r);

// The first line carries the wall-clock timestamp and timings; the body is a
// function of the config and seed alone.
struct ReportLines {
  std::string header;
  std::vector<std::string> body;

  void write(std::ostream& out) const;
};

struct AnalysisOutcome {
  // "ok", "error", "assertion" or "disagreement".
  std::string status;
  std::string message;
  AnalysisResult result;
  double seconds = 0.0;
};

// 0 when every outcome is ok, 1 for validation errors, 2 for assertion
// failures and disagreements.
int exit_code(const std::vector<AnalysisOutcome>& outcomes);

ReportLines run_report(const ExperimentConfig& config, const std::vector<AnalysisOutcome>& outcomes,
                       double total_seconds);
std::string csv_summary(const ExperimentConfig& config,
                        const std::vector<AnalysisOutcome>& outcomes);

ReportLines selftest_report(std::uint64_t seed,
                            const std::vector<acceptance::CriterionResult>& results);

}  // namespace hyperrec::expcli

#endif  // HYPERREC_EXPCLI_REPORT_HPP_

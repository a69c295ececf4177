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

#ifndef HYPERREC_EXPCLI_RUNNER_HPP_
#define HYPERREC_EXPCLI_RUNNER_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperrec/expcli/config.hpp"
#include "hyperrec/expcli/report.hpp"

namespace hyperrec::expcli {

// Runs the analyses on up to `jobs` threads; outcomes keep config order.
std::vector<AnalysisOutcome> execute(const ExperimentConfig& config, std::size_t jobs);

struct RunOptions {
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
};

// Loads, runs and writes the report, CSV and optional plot. Returns the
// process exit code; diagnostics go to `log`.
int run(const std::string& config_path, const RunOptions& options, std::ostream& log);

// Acceptance criteria 1 to 10 plus the determinism check; writes
// selftest.jsonl into the output directory.
int selftest(const RunOptions& options, std::ostream& out);

void print_catalog(std::ostream& out);

}  // namespace hyperrec::expcli

#endif  // HYPERREC_EXPCLI_RUNNER_HPP_

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

#include "hyperrec/expcli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "hyperrec/errors.hpp"
#include "hyperrec/expcli/plot.hpp"

namespace hyperrec::expcli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

AnalysisOutcome run_one(const Analysis& a) {
  AnalysisOutcome o;
  const auto start = Clock::now();
  try {
    o.result = a.run();
    o.status = o.result.consistent ? "ok" : "disagreement";
    if (!o.result.consistent) o.message = o.result.headline;
  } catch (const InvariantViolation& e) {
    o.status = "assertion";
    o.message = e.what();
  } catch (const std::invalid_argument& e) {
    o.status = "error";
    o.message = e.what();
  } catch (const std::out_of_range& e) {
    o.status = "error";
    o.message = e.what();
  } catch (const std::exception& e) {
    o.status = "assertion";
    o.message = e.what();
  }
  o.seconds = since(start);
  return o;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::vector<AnalysisOutcome> execute(const ExperimentConfig& config, std::size_t jobs) {
  const std::size_t n = config.analyses.size();
  std::vector<AnalysisOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) outcomes[i] = run_one(config.analyses[i]);
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return outcomes;
}

int run(const std::string& config_path, const RunOptions& options, std::ostream& log) {
  ExperimentConfig config;
  try {
    config = load_config(config_path, options.seed);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return 1;
  }
  const auto start = Clock::now();
  const auto outcomes = execute(config, options.jobs);
  const ReportLines report = run_report(config, outcomes, since(start));
  const int code = exit_code(outcomes);

  const std::filesystem::path dir(options.out_dir);
  try {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / config.output.report, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / config.output.report).string());
    report.write(out);
    out.close();
    write_file(dir / config.output.csv, csv_summary(config, outcomes));
    if (!config.output.plot.empty()) {
      plot_report((dir / config.output.report).string(), (dir / config.output.plot).string());
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return 1;
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    log << config.analyses[i].name << ": " << o.status << " -- "
        << (o.status == "ok" ? o.result.headline : o.message) << '\n';
  }
  log << "report: " << (dir / config.output.report).string() << '\n';
  return code;
}

int selftest(const RunOptions& options, std::ostream& out) {
  const std::uint64_t seed = options.seed.value_or(0);
  auto results = acceptance::run_criteria(seed);
  const auto again = acceptance::run_criteria(seed);
  const auto first = selftest_report(seed, results).body;
  const auto second = selftest_report(seed, again).body;
  acceptance::CriterionResult det{11, "selftest report is reproducible from the seed",
                                  first == second, "", 0.0};
  det.detail = first == second ? "two runs produced byte-identical report bodies ("
                                     + std::to_string(first.size()) + " lines)"
                               : "report bodies differ between two runs";
  results.push_back(det);

  const ReportLines report = selftest_report(seed, results);
  const std::filesystem::path dir(options.out_dir);
  std::filesystem::create_directories(dir);
  std::ofstream file(dir / "selftest.jsonl", std::ios::binary);
  report.write(file);

  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    out << "[" << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.title
        << " -- " << r.detail << '\n';
  }
  out << passed << " of " << results.size() << " criteria passed\n";
  return passed == results.size() ? 0 : 1;
}

void print_catalog(std::ostream& out) {
  for (const auto& e : catalog()) {
    out << e.name;
    if (!e.parameters.empty()) out << " (" << e.parameters << ")";
    out << ": " << e.summary << '\n';
  }
}

}  // namespace hyperrec::expcli

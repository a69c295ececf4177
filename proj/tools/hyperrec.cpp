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

// Command-line front end: run, catalog, plot, selftest.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hyperrec/expcli/plot.hpp"
#include "hyperrec/expcli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Recurrence experiments on dynamical systems, their hyperspaces and fuzzy sets"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string report;
  std::string svg;

  auto* run = app.add_subcommand("run", "Run the analyses of an experiment config");
  run->add_option("--config", config, "YAML experiment config")->required();
  run->add_option("--out", out_dir, "Output directory");
  auto* run_seed = run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  auto* cat = app.add_subcommand("catalog", "List built-in systems");

  auto* plot = app.add_subcommand("plot", "Render a report as an SVG return-time raster");
  plot->add_option("report", report, "JSONL report")->required();
  plot->add_option("output", svg, "SVG path")->required();

  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
  self->add_option("--out", out_dir, "Output directory");
  auto* self_seed = self->add_option("--seed", seed, "Root seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    hyperrec::expcli::RunOptions options;
    options.out_dir = out_dir;
    options.jobs = jobs;
    if (*run) {
      if (*run_seed) options.seed = seed;
      return hyperrec::expcli::run(config, options, std::cerr);
    }
    if (*cat) {
      hyperrec::expcli::print_catalog(std::cout);
      return 0;
    }
    if (*plot) {
      hyperrec::expcli::plot_report(report, svg);
      return 0;
    }
    if (*self) {
      if (*self_seed) options.seed = seed;
      return hyperrec::expcli::selftest(options, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

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

#ifndef HYPERREC_ACCEPTANCE_HPP_
#define HYPERREC_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hyperrec::acceptance {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  // Wall-clock budget in seconds; exceeding it fails the criterion.
  double budget_seconds;
  std::function<Outcome(std::uint64_t seed)> run;
};

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

// The property and oracle checks, ids 1 to 10.
const std::vector<Criterion>& criteria();

// Runs the selected ids (all when empty), in id order. Exceptions count as
// failures and land in the detail.
std::vector<CriterionResult> run_criteria(std::uint64_t seed, std::span<const int> ids = {});

}  // namespace hyperrec::acceptance

#endif  // HYPERREC_ACCEPTANCE_HPP_

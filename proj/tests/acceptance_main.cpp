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

// Prints one PASS/FAIL line per acceptance criterion, including the
// reproducibility check, and writes selftest.jsonl to the given directory.

#include <iostream>

#include "hyperrec/expcli/runner.hpp"

int main(int argc, char** argv) {
  hyperrec::expcli::RunOptions options;
  options.out_dir = argc > 1 ? argv[1] : ".";
  return hyperrec::expcli::selftest(options, std::cout);
}

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

#ifndef HYPERREC_RANDOM_HPP_
#define HYPERREC_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "hyperrec/fuzzy.hpp"

namespace hyperrec {

// Seeded generator with conversions written out by hand, so a seed yields the
// same stream on every standard library.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform on [0, n), rejection-sampled.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Derives independent per-instance seeds from one root seed.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

// Instance generators shared by tests, sweeps and the self test.

// Random self-map of {0, ..., n-1}.
std::vector<std::size_t> random_map(Rng& rng, std::size_t n);
// n distinct points on a line with gaps in [0.1, 1); the induced metric.
MetricSpace random_line_space(Rng& rng, std::size_t n);
// Discrete or line metric with equal odds.
MetricSpace random_finite_space(Rng& rng, std::size_t n);
// Random non-empty subset of a kFinite space.
CompactSet random_subset(Rng& rng, const MetricSpace& space);
// Up to max_points random points of any space.
CompactSet random_compact(Rng& rng, const MetricSpace& space, std::size_t max_points);
// Step fuzzy set with up to max_levels levels on a kFinite space. Levels are
// multiples of 1/grid when grid > 0, otherwise arbitrary reals.
StepFuzzySet random_step_fuzzy(Rng& rng, const MetricSpace& space, std::size_t max_levels,
                               std::size_t grid = 0);

}  // namespace hyperrec

#endif  // HYPERREC_RANDOM_HPP_

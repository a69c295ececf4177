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

#include "hyperrec/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperrec {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below needs n > 0");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return splitmix64(splitmix64(root) ^ index);
}

std::vector<std::size_t> random_map(Rng& rng, std::size_t n) {
  std::vector<std::size_t> table(n);
  for (auto& t : table) t = rng.below(n);
  return table;
}

MetricSpace random_line_space(Rng& rng, std::size_t n) {
  std::vector<double> pos(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) pos[i] = pos[i - 1] + rng.uniform(0.1, 1.0);
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::fabs(pos[i] - pos[j]);
  }
  return MetricSpace::Finite(std::move(d));
}

MetricSpace random_finite_space(Rng& rng, std::size_t n) {
  return rng.coin() ? MetricSpace::Discrete(n) : random_line_space(rng, n);
}

CompactSet random_subset(Rng& rng, const MetricSpace& space) {
  const std::size_t n = space.size();
  std::uint64_t mask = 0;
  while (mask == 0) mask = rng.below(std::uint64_t{1} << n);
  return CompactSet::FromMask(space, mask);
}

namespace {

void append_random_point(Rng& rng, const MetricSpace& space, Point& out) {
  switch (space.kind()) {
    case MetricSpace::Kind::kFinite:
      out.emplace_back(static_cast<double>(rng.below(space.size())));
      return;
    case MetricSpace::Kind::kCircle:
      out.emplace_back(rng.uniform());
      return;
    case MetricSpace::Kind::kProduct:
      for (const auto& f : space.factors()) append_random_point(rng, f, out);
      return;
  }
}

}  // namespace

CompactSet random_compact(Rng& rng, const MetricSpace& space, std::size_t max_points) {
  const std::size_t k = 1 + rng.below(std::max<std::size_t>(max_points, 1));
  std::vector<Point> pts(k);
  for (auto& p : pts) append_random_point(rng, space, p);
  return CompactSet(space, std::move(pts));
}

StepFuzzySet random_step_fuzzy(Rng& rng, const MetricSpace& space, std::size_t max_levels,
                               std::size_t grid) {
  std::size_t m = 1 + rng.below(std::max<std::size_t>(max_levels, 1));
  std::vector<double> levels;
  if (grid > 0) {
    m = std::min(m, grid);
    std::vector<std::size_t> steps(grid - 1);
    for (std::size_t i = 0; i < steps.size(); ++i) steps[i] = i + 1;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::swap(steps[i], steps[i + rng.below(steps.size() - i)]);
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
      levels.push_back(static_cast<double>(steps[i]) / static_cast<double>(grid));
    }
  } else {
    for (std::size_t i = 0; i + 1 < m; ++i) levels.push_back(rng.uniform(0.01, 0.99));
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  levels.push_back(1.0);

  std::vector<CompactSet> sets;
  sets.push_back(random_subset(rng, space));
  for (std::size_t i = 1; i < levels.size(); ++i) {
    sets.push_back(set_union(sets.back(), random_subset(rng, space)));
  }
  std::reverse(sets.begin(), sets.end());
  return StepFuzzySet(std::move(levels), std::move(sets));
}

}  // namespace hyperrec

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

#include <gtest/gtest.h>

#include <algorithm>

#include "hyperrec/fuzzy.hpp"
#include "hyperrec/random.hpp"

namespace hyperrec {
namespace {

CompactSet Idx(const MetricSpace& x, std::vector<double> idx) {
  std::vector<Point> pts;
  for (double i : idx) pts.push_back(Point{Coord(i)});
  return CompactSet(x, std::move(pts));
}

MetricSpace Line(std::vector<double> pos) {
  std::vector<std::vector<double>> d(pos.size(), std::vector<double>(pos.size()));
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = 0; j < pos.size(); ++j) d[i][j] = std::abs(pos[i] - pos[j]);
  }
  return MetricSpace::Finite(std::move(d));
}

TEST(StepFuzzySetTest, ValidatesShape) {
  const auto x = MetricSpace::Discrete(3);
  EXPECT_THROW(StepFuzzySet({0.5}, {Idx(x, {0})}), std::invalid_argument);
  EXPECT_THROW(StepFuzzySet({0.5, 0.4, 1.0}, {Idx(x, {0}), Idx(x, {0}), Idx(x, {0})}),
               std::invalid_argument);
  EXPECT_THROW(StepFuzzySet({0.5, 1.0}, {Idx(x, {0}), Idx(x, {0, 1})}), std::invalid_argument);
  EXPECT_THROW(StepFuzzySet({0.5, 1.0}, {Idx(x, {0})}), std::invalid_argument);
  EXPECT_NO_THROW(StepFuzzySet({0.5, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})}));
}

TEST(StepFuzzySetTest, LevelSetsAndMembership) {
  const auto x = MetricSpace::Discrete(3);
  const StepFuzzySet u({0.5, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})});
  EXPECT_EQ(level_set(u, 0.0), Idx(x, {0, 1}));
  EXPECT_EQ(level_set(u, 0.5), Idx(x, {0, 1}));
  EXPECT_EQ(level_set(u, 0.7), Idx(x, {0}));
  EXPECT_EQ(level_set(u, 1.0), Idx(x, {0}));
  EXPECT_EQ(u.membership(Point{Coord(0.0)}), 1.0);
  EXPECT_EQ(u.membership(Point{Coord(1.0)}), 0.5);
  EXPECT_EQ(u.membership(Point{Coord(2.0)}), 0.0);
  EXPECT_EQ(u.to_string(), "[1: {0}; 0.5: {0, 1}]");
}

TEST(StepFuzzySetTest, CanonicalDropsRedundantLevels) {
  const auto x = MetricSpace::Discrete(2);
  const StepFuzzySet u({0.3, 0.6, 1.0}, {Idx(x, {0, 1}), Idx(x, {0}), Idx(x, {0})});
  EXPECT_EQ(u.canonical().size(), 2u);
  EXPECT_EQ(u, StepFuzzySet({0.3, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})}));
  EXPECT_FALSE(u == StepFuzzySet::Characteristic(Idx(x, {0})));
}

TEST(ZadehTest, MatchesSupOverPreimage) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const auto x = random_finite_space(rng, n);
    const auto table = random_map(rng, n);
    const auto f = DynSystem::FiniteMap(x, table);
    const auto u = random_step_fuzzy(rng, x, 4);
    const auto fu = zadeh_apply(f, u);
    for (std::size_t y = 0; y < n; ++y) {
      double sup = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        if (table[s] == y) sup = std::max(sup, u.membership(Point{Coord(double(s))}));
      }
      EXPECT_EQ(fu.membership(Point{Coord(double(y))}), sup);
    }
  }
}

TEST(ZadehTest, IterationAndCharacteristic) {
  const auto f = DynSystem::FiniteMap({1, 2, 0, 0});
  const auto& x = f.space();
  const StepFuzzySet u({0.5, 1.0}, {Idx(x, {0, 3}), Idx(x, {3})});
  StepFuzzySet v = u;
  for (std::uint64_t n = 1; n <= 16; ++n) {
    v = zadeh_apply(f, v);
    EXPECT_EQ(v, zadeh_iterate(f, u, n));
  }
  const auto k = Idx(x, {1, 3});
  EXPECT_EQ(zadeh_apply(f, StepFuzzySet::Characteristic(k)),
            StepFuzzySet::Characteristic(hyper_apply(f, k)));
}

TEST(DistanceTest, SupMetricHandValue) {
  const auto x = MetricSpace::Discrete(2);
  const StepFuzzySet u({0.5, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})});
  const StepFuzzySet v({0.6, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})});
  EXPECT_EQ(d_inf(u, v), 1.0);
  EXPECT_EQ(d_inf(u, u), 0.0);
  EXPECT_NEAR(d_skorokhod(u, v), 0.1, 1e-12);
}

TEST(DistanceTest, SkorokhodTradesLevelShiftAgainstSetDistance) {
  const auto x = Line({0.0, 0.3});
  const StepFuzzySet u({0.5, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})});
  const StepFuzzySet v({0.9, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})});
  EXPECT_NEAR(d_inf(u, v), 0.3, 1e-12);
  EXPECT_NEAR(d_skorokhod(u, v), 0.3, 1e-12);
  const StepFuzzySet w({0.7, 1.0}, {Idx(x, {0, 1}), Idx(x, {0})});
  EXPECT_NEAR(d_skorokhod(u, w), 0.2, 1e-12);
}

TEST(DistanceTest, SkorokhodBoundsAndCharacteristicCase) {
  Rng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_finite_space(rng, 1 + rng.below(4));
    const auto u = random_step_fuzzy(rng, x, 3);
    const auto v = random_step_fuzzy(rng, x, 3);
    const double d0 = d_skorokhod(u, v);
    EXPECT_LE(d0, d_inf(u, v) + kTolerance);
    EXPECT_NEAR(d0, d_skorokhod(v, u), 1e-9);
    const auto chi = StepFuzzySet::Characteristic(random_subset(rng, x));
    EXPECT_NEAR(d_skorokhod(chi, v), d_inf(chi, v), 1e-6);
  }
}

TEST(DistanceTest, MatchRealizesTheDistance) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_finite_space(rng, 1 + rng.below(4));
    const auto u = random_step_fuzzy(rng, x, 3);
    const auto v = random_step_fuzzy(rng, x, 3);
    const auto m = skorokhod_match(u, v);
    const double cost = std::max(m.xi.displacement(), d_inf(u, reparametrize(v, m.xi)));
    EXPECT_LE(cost, m.distance + 1e-6);
  }
}

TEST(ReparametrizationTest, PiecewiseLinear) {
  const Reparametrization xi({{0.5, 0.25}});
  EXPECT_EQ(xi(0.0), 0.0);
  EXPECT_EQ(xi(0.5), 0.25);
  EXPECT_DOUBLE_EQ(xi(0.75), 0.625);
  EXPECT_EQ(xi(1.0), 1.0);
  EXPECT_EQ(xi.displacement(), 0.25);
  EXPECT_THROW(Reparametrization({{0.5, 0.25}, {0.6, 0.2}}), std::invalid_argument);
}

TEST(StratifyTest, MergesCloseBrackets) {
  const auto x = Line({0.0, 0.1, 1.0});
  const StepFuzzySet u({0.25, 0.5, 1.0}, {Idx(x, {0, 1, 2}), Idx(x, {0, 1}), Idx(x, {0})});
  EXPECT_EQ(stratify(u, 0.2), (std::vector<double>{0.0, 0.25, 1.0}));
  EXPECT_EQ(stratify(u, 0.05), (std::vector<double>{0.0, 0.25, 0.5, 1.0}));
  EXPECT_EQ(stratify(u, 2.0), (std::vector<double>{0.0, 1.0}));
}

TEST(StratifyTest, EveryMergedBracketStaysClose) {
  Rng rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_line_space(rng, 1 + rng.below(5));
    const auto u = random_step_fuzzy(rng, x, 5);
    const double eps = rng.uniform(0.01, 1.5);
    const auto a = stratify(u, eps);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      const auto& top = level_set(u, a[i + 1]);
      for (double b : u.levels()) {
        if (b > a[i] && b <= a[i + 1]) EXPECT_LT(hausdorff(level_set(u, b), top), eps);
      }
    }
  }
}

TEST(WitnessFuzzyTest, TailUnions) {
  const auto x = MetricSpace::Discrete(2);
  const std::vector<double> levels{0.5, 1.0};
  const std::vector<CompactSet> parts{Idx(x, {1}), Idx(x, {0})};
  const auto v = witness_fuzzy(levels, parts);
  EXPECT_EQ(level_set(v, 1.0), Idx(x, {0}));
  EXPECT_EQ(level_set(v, 0.5), Idx(x, {0, 1}));
  const std::vector<CompactSet> short_parts{Idx(x, {1})};
  EXPECT_THROW(witness_fuzzy(levels, short_parts), std::invalid_argument);
}

}  // namespace
}  // namespace hyperrec

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

#include "hyperrec/verify.hpp"

#include <gtest/gtest.h>

namespace hyperrec::verify {
namespace {

TEST(ConvergentsTest, GoldenDenominatorsAreFibonacci) {
  const auto cf = convergents(golden(), 1000);
  std::vector<std::uint64_t> qs;
  for (const auto& c : cf) qs.push_back(c.q);
  EXPECT_EQ(qs, (std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377,
                                            610, 987}));
  for (std::size_t k = 0; k + 1 < cf.size(); ++k) {
    EXPECT_LT(cf[k].residual, 1.0L / static_cast<long double>(cf[k + 1].q));
    EXPECT_NEAR(static_cast<double>(cf[k].residual),
                static_cast<double>(circle_norm(golden(), cf[k].q)), 1e-15);
  }
}

TEST(ConvergentsTest, RationalTerminates) {
  const auto cf = convergents(0.375L, 100);  // 3/8 = [0; 2, 1, 2]
  ASSERT_FALSE(cf.empty());
  EXPECT_EQ(cf.back().q, 8u);
  EXPECT_EQ(cf.back().p, 3u);
}

TEST(CircleNormTest, HandValues) {
  EXPECT_NEAR(static_cast<double>(circle_norm(0.3L, 1)), 0.3, 1e-15);
  EXPECT_NEAR(static_cast<double>(circle_norm(0.3L, 3)), 0.1, 1e-15);
  EXPECT_NEAR(static_cast<double>(circle_norm(0.25L, 4)), 0.0, 1e-15);
}

TEST(BruteHausdorffTest, CircleHandValue) {
  const auto c = MetricSpace::Circle();
  // {0.1, 0.9} vs {0}: both points are 0.1 from 0 across the wrap.
  EXPECT_NEAR(brute_hausdorff(c, {Point{0.1}, Point{0.9}}, {Point{0.0}}), 0.1, 1e-12);
  EXPECT_NEAR(brute_hausdorff(c, {Point{0.0}}, {Point{0.0}, Point{0.5}}), 0.5, 1e-12);
}

TEST(BruteZadehTest, SupOverPreimages) {
  const auto f = DynSystem::FiniteMap({1, 1, 0});
  const auto x = f.space();
  const StepFuzzySet u({0.5, 1.0}, {CompactSet(x, {Point{0.0}, Point{1.0}}),
                                    CompactSet(x, {Point{0.0}})});
  // 0 -> 1 with value 1, 1 -> 1 with 0.5, 2 -> 0 with 0.
  EXPECT_EQ(brute_zadeh_values(f, u), (std::vector<double>{0.0, 1.0, 0.0}));
}

TEST(BruteSkorokhodTest, CharacteristicEqualsSup) {
  const auto x = MetricSpace::Discrete(2);
  const auto chi = StepFuzzySet::Characteristic(CompactSet(x, {Point{0.0}}));
  const StepFuzzySet v({0.4, 1.0}, {CompactSet(x, {Point{0.0}, Point{1.0}}),
                                    CompactSet(x, {Point{0.0}})});
  EXPECT_NEAR(brute_skorokhod(chi, chi), 0.0, 1e-12);
  EXPECT_NEAR(brute_skorokhod(chi, v), d_inf(chi, v), 1e-12);
}

TEST(BruteSkorokhodTest, LevelShiftCostsTheGap) {
  const auto x = MetricSpace::Discrete(2);
  const auto top = CompactSet(x, {Point{0.0}});
  const auto all = CompactSet(x, {Point{0.0}, Point{1.0}});
  const StepFuzzySet u({0.3, 1.0}, {all, top});
  const StepFuzzySet v({0.5, 1.0}, {all, top});
  EXPECT_NEAR(brute_skorokhod(u, v), 0.2, 1e-12);
  EXPECT_NEAR(d_inf(u, v), 1.0, 1e-12);
}

}  // namespace
}  // namespace hyperrec::verify

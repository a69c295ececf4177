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

#include "hyperrec/hyperspace.hpp"
#include "hyperrec/random.hpp"

namespace hyperrec {
namespace {

CompactSet Idx(const MetricSpace& x, std::vector<double> idx) {
  std::vector<Point> pts;
  for (double i : idx) pts.push_back(Point{Coord(i)});
  return CompactSet(x, std::move(pts));
}

CompactSet Circ(std::vector<double> xs) {
  std::vector<Point> pts;
  for (double v : xs) pts.push_back(Point{Coord(v)});
  return CompactSet(MetricSpace::Circle(), std::move(pts));
}

TEST(CompactSetTest, SortsAndDeduplicates) {
  const auto k = Circ({0.75, 0.25, 0.25 + 1e-12, 1.25});
  EXPECT_EQ(k.size(), 2u);
  EXPECT_EQ(k.to_string(), "{0.25, 0.75}");
  EXPECT_THROW(CompactSet(MetricSpace::Circle(), {}), std::invalid_argument);
}

TEST(CompactSetTest, MaskRoundTrip) {
  const auto x = MetricSpace::Discrete(4);
  for (std::uint64_t m = 1; m < 16; ++m) EXPECT_EQ(CompactSet::FromMask(x, m).mask(), m);
}

TEST(HausdorffTest, HandValues) {
  const auto x = MetricSpace::Discrete(3);
  EXPECT_EQ(hausdorff(Idx(x, {0}), Idx(x, {1})), 1.0);
  EXPECT_EQ(hausdorff(Idx(x, {0, 1}), Idx(x, {0, 1})), 0.0);
  EXPECT_NEAR(hausdorff(Circ({0.0}), Circ({0.0, 0.3})), 0.3, 1e-15);
  EXPECT_NEAR(directed_distance(Circ({0.0}), Circ({0.0, 0.3})), 0.0, 1e-15);
}

TEST(HausdorffTest, MetricAxiomsOnRandomSets) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = trial % 2 == 0 ? random_finite_space(rng, 1 + rng.below(5))
                                  : MetricSpace::Circle();
    const auto a = random_compact(rng, x, 4);
    const auto b = random_compact(rng, x, 4);
    const auto c = random_compact(rng, x, 4);
    EXPECT_EQ(hausdorff(a, a), 0.0);
    EXPECT_EQ(hausdorff(a, b), hausdorff(b, a));
    EXPECT_LE(hausdorff(a, c), hausdorff(a, b) + hausdorff(b, c) + kTolerance);
  }
}

TEST(HausdorffTest, UnionBound) {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = trial % 2 == 0 ? random_finite_space(rng, 1 + rng.below(5))
                                  : MetricSpace::Circle();
    const auto a = random_compact(rng, x, 3);
    const auto b = random_compact(rng, x, 3);
    const auto c = random_compact(rng, x, 3);
    const auto d = random_compact(rng, x, 3);
    EXPECT_LE(hausdorff(set_union(a, b), set_union(c, d)),
              std::max(hausdorff(a, c), hausdorff(b, d)) + kTolerance);
  }
}

TEST(HyperApplyTest, CommutesWithUnion) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const auto x = MetricSpace::Discrete(n);
    const auto f = DynSystem::FiniteMap(x, random_map(rng, n));
    const auto a = random_subset(rng, x);
    const auto b = random_subset(rng, x);
    EXPECT_EQ(hyper_apply(f, set_union(a, b)), set_union(hyper_apply(f, a), hyper_apply(f, b)));
  }
}

TEST(HyperApplyTest, ThreeCycleImage) {
  const auto f = DynSystem::FiniteMap({1, 2, 0});
  const auto k = Idx(f.space(), {0, 1});
  EXPECT_EQ(hyper_apply(f, k), Idx(f.space(), {1, 2}));
  EXPECT_EQ(hyper_iterate(f, k, 3), k);
}

TEST(VietorisTest, CoverAndMeet) {
  const auto x = MetricSpace::Discrete(3);
  const VietorisOpen v({OpenSet::Subset({0}), OpenSet::Subset({1})});
  EXPECT_TRUE(vietoris_contains(v, Idx(x, {0, 1})));
  EXPECT_FALSE(vietoris_contains(v, Idx(x, {0})));
  EXPECT_FALSE(vietoris_contains(v, Idx(x, {0, 1, 2})));
  EXPECT_THROW(VietorisOpen({}), std::invalid_argument);
}

TEST(VietorisTest, BallMembershipIsStrict) {
  const auto x = MetricSpace::Discrete(2);
  EXPECT_TRUE(hausdorff_ball_contains(Idx(x, {0}), 0.5, Idx(x, {0})));
  EXPECT_FALSE(hausdorff_ball_contains(Idx(x, {0}), 1.0, Idx(x, {0, 1})));
  EXPECT_THROW(hausdorff_ball_contains(Idx(x, {0}), 0.0, Idx(x, {0})), std::invalid_argument);
}

TEST(ProductEmbedTest, CartesianProduct) {
  const auto x = MetricSpace::Discrete(3);
  const std::vector<CompactSet> parts{Idx(x, {0, 1}), Idx(x, {2})};
  const auto k = product_embed(parts);
  EXPECT_EQ(k.size(), 2u);
  EXPECT_EQ(k.space().dim(), 2u);
  EXPECT_EQ(k.to_string(), "{(0, 2), (1, 2)}");
}

TEST(EnumerateTest, AllNonEmptySubsets) {
  const auto x = MetricSpace::Discrete(4);
  const auto all = enumerate_compacts(x);
  EXPECT_EQ(all.size(), 15u);
  EXPECT_EQ(all.front().mask(), 1u);
  EXPECT_EQ(all.back().mask(), 15u);
  EXPECT_THROW(enumerate_compacts(MetricSpace::Discrete(6)), std::invalid_argument);
  EXPECT_THROW(enumerate_compacts(MetricSpace::Circle()), std::invalid_argument);
}

}  // namespace
}  // namespace hyperrec

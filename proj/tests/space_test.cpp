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

#include <cmath>

#include "hyperrec/random.hpp"
#include "hyperrec/space.hpp"

namespace hyperrec {
namespace {

Point P(double x) { return Point{Coord(x)}; }

TEST(MetricSpaceTest, FiniteRejectsBadTables) {
  EXPECT_THROW(MetricSpace::Finite({{0, 1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(MetricSpace::Finite({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(MetricSpace::Finite({{1, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(MetricSpace::Finite({{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(MetricSpace::Finite({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
}

TEST(MetricSpaceTest, DiscreteDistances) {
  const auto x = MetricSpace::Discrete(3);
  EXPECT_EQ(x.distance(P(0), P(0)), 0.0);
  EXPECT_EQ(x.distance(P(0), P(2)), 1.0);
  EXPECT_TRUE(x.is_discrete());
  EXPECT_THROW(x.validate(P(3)), std::out_of_range);
  EXPECT_THROW(x.validate(P(0.5)), std::out_of_range);
}

TEST(MetricSpaceTest, CircleDistanceWraps) {
  const auto c = MetricSpace::Circle();
  EXPECT_NEAR(c.distance(P(0.1), P(0.9)), 0.2, 1e-15);
  EXPECT_NEAR(c.distance(P(0.0), P(0.5)), 0.5, 1e-15);
  const Point a{Coord::Rational(1, 3)};
  const Point b{Coord::Rational(2, 3)};
  EXPECT_NEAR(c.distance(a, b), 1.0 / 3.0, 1e-15);
}

TEST(MetricSpaceTest, ProductUsesMaxMetric) {
  const auto x = MetricSpace::Product({MetricSpace::Circle(), MetricSpace::Discrete(2)});
  EXPECT_EQ(x.dim(), 2u);
  const Point a{Coord(0.1), Coord(0.0)};
  const Point b{Coord(0.3), Coord(0.0)};
  const Point c{Coord(0.1), Coord(1.0)};
  EXPECT_NEAR(x.distance(a, b), 0.2, 1e-15);
  EXPECT_EQ(x.distance(a, c), 1.0);
}

TEST(MetricSpaceTest, RandomLineSpacesSatisfyAxioms) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_line_space(rng, 1 + rng.below(5));
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(x.table_distance(i, j), x.table_distance(j, i));
        for (std::size_t k = 0; k < n; ++k) {
          EXPECT_LE(x.table_distance(i, k),
                    x.table_distance(i, j) + x.table_distance(j, k) + kTolerance);
        }
      }
    }
  }
}

TEST(CycleStructureTest, WanderingAbsorber) {
  const auto f = DynSystem::FiniteMap({1, 1});
  const auto& c = f.cycles();
  EXPECT_EQ(c.preperiod, 1u);
  ASSERT_TRUE(c.period.has_value());
  EXPECT_EQ(*c.period, 1u);
  EXPECT_EQ(f.image(0, 0), 0u);
  EXPECT_EQ(f.image(0, 5), 1u);
}

TEST(CycleStructureTest, PeriodIsLcmOfCycleLengths) {
  const auto f = DynSystem::FiniteMap({1, 0, 3, 4, 2, 2});
  EXPECT_EQ(*f.cycles().period, 6u);
  EXPECT_EQ(f.cycles().preperiod, 1u);
  for (std::size_t x = 0; x < 6; ++x) {
    std::size_t y = x;
    for (std::uint64_t n = 0; n < 40; ++n) {
      EXPECT_EQ(f.image(x, n), y);
      y = f.table()[y];
    }
  }
}

TEST(DynSystemTest, DoublingFollowsRationalOrbitsExactly) {
  const auto d = DynSystem::Doubling();
  const Point third{Coord::Rational(1, 3)};
  const Point img = d.apply(third);
  ASSERT_TRUE(img[0].exact());
  EXPECT_EQ(img[0].num(), 2);
  EXPECT_EQ(img[0].den(), 3);
  const Point far = d.iterate(third, 1000000);
  EXPECT_EQ(far[0].num(), 1);
  EXPECT_EQ(far[0].den(), 3);
}

TEST(DynSystemTest, DoublingOnDyadicDoubles) {
  const auto d = DynSystem::Doubling();
  EXPECT_EQ(d.iterate(P(0.375), 1)[0].value(), 0.75);
  EXPECT_EQ(d.iterate(P(0.375), 2)[0].value(), 0.5);
  EXPECT_EQ(d.iterate(P(0.375), 3)[0].value(), 0.0);
  EXPECT_EQ(d.iterate(P(0.1), 200)[0].value(), 0.0);
}

TEST(DynSystemTest, RotationIterateMatchesClosedForm) {
  const double theta = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto r = DynSystem::Rotation(theta);
  const auto c = MetricSpace::Circle();
  Point x = P(0.2);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    x = r.apply(x);
    EXPECT_LT(c.distance(x, r.iterate(P(0.2), n)), 1e-12);
  }
}

TEST(DynSystemTest, NFoldActsCoordinatewise) {
  const auto f = DynSystem::FiniteMap({1, 2, 0});
  const auto f2 = n_fold(f, 2);
  EXPECT_EQ(f2.space().dim(), 2u);
  const Point x{Coord(0.0), Coord(2.0)};
  const Point y = f2.apply(x);
  EXPECT_EQ(y[0].value(), 1.0);
  EXPECT_EQ(y[1].value(), 0.0);
}

TEST(OpenSetTest, ArcWrapsThroughZero) {
  const auto c = MetricSpace::Circle();
  const auto u = OpenSet::Arcs({Arc{Coord(0.9), Coord(0.1)}});
  EXPECT_TRUE(open_contains(c, u, P(0.95)));
  EXPECT_TRUE(open_contains(c, u, P(0.0)));
  EXPECT_TRUE(open_contains(c, u, P(0.05)));
  EXPECT_FALSE(open_contains(c, u, P(0.5)));
  EXPECT_FALSE(open_contains(c, u, P(0.9)));
}

TEST(OpenSetTest, BallsAreStrict) {
  const auto x = MetricSpace::Discrete(3);
  const auto u = OpenSet::Balls({Ball{P(0), 1.0}});
  EXPECT_TRUE(open_contains(x, u, P(0)));
  EXPECT_FALSE(open_contains(x, u, P(1)));
}

TEST(OpenSetTest, ValidationRejectsMismatchedKinds) {
  EXPECT_THROW(validate_open(MetricSpace::Circle(), OpenSet::Subset({0})),
               std::invalid_argument);
  EXPECT_THROW(validate_open(MetricSpace::Discrete(2), OpenSet::Subset({2})), std::out_of_range);
}

TEST(FiniteViewTest, EncodeDecodeRoundTrip) {
  const auto f = n_fold(DynSystem::FiniteMap({1, 2, 0}), 2);
  const FiniteView view(f);
  ASSERT_EQ(view.size(), 9u);
  for (std::size_t s = 0; s < 9; ++s) {
    EXPECT_EQ(view.encode(view.decode(s)), s);
    EXPECT_EQ(view.table()[s], view.encode(f.apply(view.decode(s))));
  }
  EXPECT_EQ(*view.cycles().period, 3u);
}

}  // namespace
}  // namespace hyperrec

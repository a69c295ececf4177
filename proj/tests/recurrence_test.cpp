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
#include <numeric>

#include "hyperrec/errors.hpp"
#include "hyperrec/random.hpp"
#include "hyperrec/recurrence.hpp"

namespace hyperrec {
namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

std::vector<std::uint64_t> Range(std::uint64_t lo, std::uint64_t hi, std::uint64_t step = 1) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

CompactSet Idx(const MetricSpace& x, std::vector<double> idx) {
  std::vector<Point> pts;
  for (double i : idx) pts.push_back(Point{Coord(i)});
  return CompactSet(x, std::move(pts));
}

OpenSet ArcAround(Coord c, double r) {
  return OpenSet::Balls({Ball{Point{c}, r}});
}

TEST(ReturnSetTest, IdentityReturnsAlways) {
  const auto id = DynSystem::FiniteMap({0, 1, 2});
  const auto w = return_set(id, OpenSet::Subset({1}), OpenSet::Subset({1}), 20);
  EXPECT_EQ(w.members(), Range(0, 20));
  EXPECT_EQ(w.semantics(), Semantics::kExact);
  const auto rot = DynSystem::Rotation(0.0);
  EXPECT_EQ(ell_return_set(rot, ArcAround(Coord(0.3), 0.01), 3, 50).members(), Range(0, 50));
}

TEST(ReturnSetTest, ThreeCycle) {
  const auto f = DynSystem::FiniteMap({1, 2, 0});
  const auto w = return_set(f, OpenSet::Subset({0}), OpenSet::Subset({0}), 30);
  EXPECT_EQ(w.members(), Range(0, 30, 3));
  ASSERT_TRUE(w.certificate().has_value());
  EXPECT_EQ(w.certificate()->preperiod, 0u);
  EXPECT_EQ(w.certificate()->period, 3u);
  EXPECT_EQ(ell_return_set(f, OpenSet::Subset({0}), 2, 30).members(), Range(0, 30, 3));
}

TEST(ReturnSetTest, WanderingPointNeverReturns) {
  const auto f = DynSystem::FiniteMap({1, 1});
  const auto w = return_set(f, OpenSet::Subset({0}), OpenSet::Subset({0}), 50);
  EXPECT_EQ(w.members(), std::vector<std::uint64_t>{0});
  EXPECT_FALSE(family_eval(w, FamilySpec::InfiniteExact()).holds);
}

TEST(ReturnSetTest, DoublingNearOneThirdReturnsAtEvenTimes) {
  const auto d = DynSystem::Doubling();
  const auto u = ArcAround(Coord::Rational(1, 3), 0.1);
  for (std::size_t ell = 1; ell <= 3; ++ell) {
    const auto w = ell_return_set(d, u, ell, 64);
    EXPECT_EQ(w.semantics(), Semantics::kWitnessed);
    for (std::uint64_t n = 0; n <= 64; n += 2) EXPECT_TRUE(w.contains(n)) << n;
  }
}

TEST(ReturnSetTest, EllOneMatchesReturnSet) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto f = DynSystem::FiniteMap(random_map(rng, n));
    const auto u = random_subset(rng, f.space());
    std::vector<std::size_t> idx;
    for (const auto& p : u.points()) idx.push_back(static_cast<std::size_t>(p[0].value()));
    const auto open = OpenSet::Subset(idx);
    EXPECT_EQ(ell_return_set(f, open, 1, 40).members(), return_set(f, open, open, 40).members());
  }
  const auto rot = DynSystem::Rotation(kGolden);
  const auto arc = ArcAround(Coord(0.2), 0.05);
  EXPECT_EQ(ell_return_set(rot, arc, 1, 300).members(), return_set(rot, arc, arc, 300).members());
}

TEST(ReturnSetTest, CertificateMatchesBruteForce) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto table = random_map(rng, n);
    const auto f = DynSystem::FiniteMap(table);
    const std::size_t ell = 1 + rng.below(3);
    const auto w = ell_return_set(f, OpenSet::Subset({0}), ell, 10);
    ASSERT_TRUE(w.certificate().has_value());
    for (std::uint64_t t = w.certificate()->preperiod; t < 200; ++t) {
      bool brute = true;
      std::size_t x = 0;
      for (std::size_t j = 1; j <= ell; ++j) {
        for (std::uint64_t s = 0; s < t; ++s) x = table[x];
        brute = brute && x == 0;
      }
      EXPECT_EQ(w.certificate()->member(t), brute);
    }
  }
}

TEST(ReturnSetTest, MonotoneInEll) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = DynSystem::FiniteMap(random_map(rng, 1 + rng.below(5)));
    const auto u = OpenSet::Subset({0});
    for (std::size_t ell = 1; ell < 4; ++ell) {
      const auto lo = ell_return_set(f, u, ell + 1, 60);
      const auto hi = ell_return_set(f, u, ell, 60);
      for (auto n : lo.members()) EXPECT_TRUE(hi.contains(n));
    }
  }
}

TEST(FamilyTest, FullWindowSatisfiesEverything) {
  const ReturnWindow w(100, Range(0, 100), Semantics::kExact, Certificate{0, 1, {true}});
  for (const auto& spec :
       {FamilySpec::InfiniteExact(), FamilySpec::CofiniteExact(), FamilySpec::InfiniteWindow(5),
        FamilySpec::ThickWindow(50), FamilySpec::SyndeticWindow(1), FamilySpec::ContainsAP(12)}) {
    EXPECT_TRUE(family_eval(w, spec).holds) << spec.describe();
  }
}

TEST(FamilyTest, MultiplesOfThree) {
  const ReturnWindow w(30, Range(0, 30, 3), Semantics::kExact,
                       Certificate{0, 3, {true, false, false}});
  EXPECT_TRUE(family_eval(w, FamilySpec::InfiniteExact()).holds);
  EXPECT_FALSE(family_eval(w, FamilySpec::CofiniteExact()).holds);
  EXPECT_FALSE(family_eval(w, FamilySpec::ThickWindow(2)).holds);
  EXPECT_EQ(family_eval(w, FamilySpec::InfiniteExact()).semantics, Semantics::kExact);
}

TEST(FamilyTest, EvenNumbers) {
  const ReturnWindow w(100, Range(0, 100, 2), Semantics::kWindowed);
  EXPECT_TRUE(family_eval(w, FamilySpec::SyndeticWindow(2)).holds);
  EXPECT_FALSE(family_eval(w, FamilySpec::SyndeticWindow(1)).holds);
  EXPECT_TRUE(family_eval(w, FamilySpec::ContainsAP(10)).holds);
  EXPECT_THROW(family_eval(w, FamilySpec::InfiniteExact()), std::invalid_argument);
}

TEST(FamilyTest, PredicatesAreMonotoneInTheirParameter) {
  // Every window of horizon <= 9 (all 2^10 subsets) and every parameter.
  for (std::uint64_t h = 0; h <= 9; ++h) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (h + 1)); ++mask) {
      std::vector<std::uint64_t> m;
      for (std::uint64_t n = 0; n <= h; ++n) {
        if ((mask >> n) & 1U) m.push_back(n);
      }
      const ReturnWindow w(h, m, Semantics::kWindowed);
      for (std::uint64_t p = 1; p < 12; ++p) {
        if (family_eval(w, FamilySpec::ThickWindow(p + 1)).holds) {
          EXPECT_TRUE(family_eval(w, FamilySpec::ThickWindow(p)).holds);
        }
        if (family_eval(w, FamilySpec::InfiniteWindow(p + 1)).holds) {
          EXPECT_TRUE(family_eval(w, FamilySpec::InfiniteWindow(p)).holds);
        }
        if (family_eval(w, FamilySpec::ContainsAP(p + 1)).holds) {
          EXPECT_TRUE(family_eval(w, FamilySpec::ContainsAP(p)).holds);
        }
        if (family_eval(w, FamilySpec::SyndeticWindow(p)).holds) {
          EXPECT_TRUE(family_eval(w, FamilySpec::SyndeticWindow(p + 1)).holds);
        }
      }
    }
  }
}

TEST(FamilyTest, ParseRoundTrip) {
  for (const auto& spec :
       {FamilySpec::InfiniteExact(), FamilySpec::CofiniteExact(), FamilySpec::InfiniteWindow(5),
        FamilySpec::ThickWindow(3), FamilySpec::SyndeticWindow(2), FamilySpec::ContainsAP(8)}) {
    EXPECT_EQ(FamilySpec::Parse(spec.describe()), spec);
  }
  EXPECT_THROW(FamilySpec::Parse("thick_window"), std::invalid_argument);
  EXPECT_THROW(FamilySpec::Parse("thick_window(0)"), std::invalid_argument);
  EXPECT_THROW(FamilySpec::Parse("sparse"), std::invalid_argument);
}

TEST(SystemVerdictTest, IdentityAndWandering) {
  const auto id = DynSystem::FiniteMap({0, 1});
  const auto probes = singleton_probes(id.space());
  const auto v = is_rec_system(id, probes, 2, FamilySpec::CofiniteExact(), 20);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.exhaustive);

  const auto wander = DynSystem::FiniteMap({1, 1});
  const auto w = is_rec_system(wander, singleton_probes(wander.space()), 1,
                               FamilySpec::InfiniteExact(), 20);
  EXPECT_FALSE(w.holds);
  EXPECT_FALSE(w.probes[0].verdict.holds);
  EXPECT_TRUE(w.probes[1].verdict.holds);
}

TEST(SystemVerdictTest, GoldenRotationArcProbes) {
  const auto rot = DynSystem::Rotation(kGolden);
  std::vector<OpenSet> probes;
  for (int i = 0; i < 10; ++i) probes.push_back(ArcAround(Coord(0.1 * i), 0.05));
  const auto v = is_rec_system(rot, probes, 3, FamilySpec::InfiniteWindow(5), 2000);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.exhaustive);
  EXPECT_EQ(v.scope(), "over probe family");
}

TEST(SystemVerdictTest, ProductSingletonsAreExhaustive) {
  const auto f = n_fold(DynSystem::FiniteMap({1, 0}), 2);
  const auto probes = singleton_probes(f.space());
  ASSERT_EQ(probes.size(), 4u);
  const auto v = is_rec_system(f, probes, 1, FamilySpec::InfiniteExact(), 10);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.exhaustive);
}

TEST(HyperWitnessTest, ThreeCycleTwoOpens) {
  const auto f = DynSystem::FiniteMap({1, 2, 0});
  const VietorisOpen v({OpenSet::Subset({0}), OpenSet::Subset({1})});
  const auto k = hyper_rec_witness(f, v, 3, 1);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, Idx(f.space(), {0, 1}));
  EXPECT_FALSE(hyper_rec_witness(f, v, 2, 1).has_value());
}

TEST(HyperWitnessTest, SingleOpenGivesSinglePoint) {
  const auto f = DynSystem::FiniteMap({0, 1, 2});
  const auto k = hyper_rec_witness(f, VietorisOpen({OpenSet::Subset({0, 2})}), 5, 2);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->size(), 1u);
}

TEST(HyperWitnessTest, WanderingHasNone) {
  const auto f = DynSystem::FiniteMap({1, 1});
  for (std::uint64_t n = 1; n < 5; ++n) {
    EXPECT_FALSE(hyper_rec_witness(f, VietorisOpen({OpenSet::Subset({0})}), n, 1).has_value());
  }
}

TEST(HyperWitnessTest, BallWitnessesStayInside) {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const auto x = random_finite_space(rng, n);
    const auto f = DynSystem::FiniteMap(x, random_map(rng, n));
    const auto c = random_subset(rng, x);
    const double eps = rng.uniform(0.05, 1.5);
    const std::uint64_t t = 1 + rng.below(6);
    const std::size_t ell = 1 + rng.below(3);
    const auto k = hyper_rec_witness(f, c, eps, t, ell);
    if (!k) continue;
    for (std::size_t j = 0; j <= ell; ++j) {
      EXPECT_LT(hausdorff(c, hyper_iterate(f, *k, j * t)), eps);
    }
  }
}

TEST(FuzzyWitnessTest, CharacteristicOnIdentity) {
  const auto id = DynSystem::FiniteMap({0, 1, 2});
  const auto chi = StepFuzzySet::Characteristic(Idx(id.space(), {0, 2}));
  const auto v = fuzzy_rec_witness(id, chi, 0.5, 7, 2);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, chi);
}

TEST(FuzzyWitnessTest, ThreeCycle) {
  const auto f = DynSystem::FiniteMap({1, 2, 0});
  const auto chi = StepFuzzySet::Characteristic(Idx(f.space(), {0}));
  const auto v = fuzzy_rec_witness(f, chi, 0.5, 3, 2);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, chi);
  EXPECT_EQ(fuzzy_to_hyper_witness(*v), Idx(f.space(), {0}));
}

TEST(FuzzyWitnessTest, GoldenRotationTwoLevels) {
  const auto rot = DynSystem::Rotation(kGolden);
  const auto c = MetricSpace::Circle();
  const StepFuzzySet u({0.5, 1.0}, {CompactSet(c, {Point{Coord(0.1)}, Point{Coord(0.6)}}),
                                    CompactSet(c, {Point{Coord(0.1)}})});
  const auto v = fuzzy_rec_witness(rot, u, 0.2, 13, 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_LT(d_inf(u, zadeh_iterate(rot, *v, 13)), 0.2);
}

TEST(PointRecurrenceTest, FixedPoint) {
  const auto id = DynSystem::FiniteMap({0});
  const auto r = point_recurrence(id, Point{Coord(0.0)}, 0.5, 40);
  EXPECT_EQ(r.window.members(), Range(0, 40));
  EXPECT_EQ(r.max_ap, kMaxApLength);
}

TEST(PointRecurrenceTest, GoldenRotationFibonacciTimes) {
  const auto rot = DynSystem::Rotation(kGolden);
  const auto r = point_recurrence(rot, Point{Coord(0.0)}, 0.05, 1000);
  for (std::uint64_t q : {13, 21, 34, 55, 89}) EXPECT_TRUE(r.window.contains(q)) << q;
  EXPECT_FALSE(r.window.contains(8));
}

TEST(PointRecurrenceTest, WanderingPoint) {
  const auto f = DynSystem::FiniteMap({1, 1});
  const auto r = point_recurrence(f, Point{Coord(0.0)}, 0.5, 100);
  EXPECT_EQ(r.window.members(), std::vector<std::uint64_t>{0});
  EXPECT_EQ(r.max_ap, 0u);
}

TEST(QuasiRigidityTest, IdentityTakesEveryTime) {
  const auto id = DynSystem::FiniteMap({0, 1});
  const std::vector<Point> sample{Point{Coord(0.0)}, Point{Coord(1.0)}};
  const auto schedule = default_eps_schedule();
  const auto q = quasi_rigidity_search(id, sample, schedule, 100);
  EXPECT_EQ(q.times, Range(1, 13));
  EXPECT_EQ(q.served, 13u);
}

TEST(QuasiRigidityTest, PermutationOrder) {
  const auto f = DynSystem::FiniteMap({1, 2, 0, 4, 3});
  std::vector<Point> sample;
  for (int i = 0; i < 5; ++i) sample.push_back(Point{Coord(double(i))});
  const std::vector<double> schedule{0.5, 0.25, 0.125};
  const auto q = quasi_rigidity_search(f, sample, schedule, 100);
  EXPECT_EQ(q.times, (std::vector<std::uint64_t>{6, 12, 18}));
  for (double r : q.residuals) EXPECT_EQ(r, 0.0);
}

TEST(QuasiRigidityTest, ExhaustedHorizonStopsEarly) {
  const auto f = DynSystem::FiniteMap({1, 1});
  const std::vector<Point> sample{Point{Coord(0.0)}};
  const std::vector<double> schedule{0.5};
  const auto q = quasi_rigidity_search(f, sample, schedule, 50);
  EXPECT_TRUE(q.times.empty());
  EXPECT_EQ(q.served, 0u);
  EXPECT_THROW(quasi_rigidity_search(f, {}, schedule, 50), std::invalid_argument);
}

TEST(SamplingTest, RationalGridComesFirst) {
  const auto c = MetricSpace::Circle();
  const auto pts = sample_open(c, ArcAround(Coord::Rational(1, 3), 1.0 / 64), {});
  ASSERT_FALSE(pts.empty());
  EXPECT_TRUE(pts[0][0].exact());
  EXPECT_EQ(pts[0][0].den(), 3);
  EXPECT_LE(pts.size(), 512u);
  for (const auto& p : pts) {
    EXPECT_TRUE(open_contains(c, ArcAround(Coord::Rational(1, 3), 1.0 / 64), p));
  }
}

}  // namespace
}  // namespace hyperrec

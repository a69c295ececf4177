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

#include "hyperrec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>

#include "hyperrec/oracle.hpp"
#include "hyperrec/random.hpp"
#include "hyperrec/verify.hpp"

namespace hyperrec::acceptance {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string count_line(std::size_t bad, std::size_t total, const std::string& what) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " " + what;
}

Outcome compact_sweep(std::uint64_t seed) {
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t n = 1 + rng.below(4);
    const auto f = DynSystem::FiniteMap(random_finite_space(rng, n), random_map(rng, n));
    const std::size_t ell = 1 + rng.below(2);
    const auto r = check_compact_equivalence(f, ell, FamilySpec::InfiniteExact(), 3);
    const bool exact = r.verdict("products").semantics == "exact" &&
                       r.verdict("hyperspace").semantics == "exact";
    if (!r.agreement || !exact) {
      if (bad++ == 0) first = "; first disagreement on " + r.system;
    }
  }
  return {bad == 0, count_line(bad, 200, "systems agree with exact semantics") + first};
}

Outcome fuzzy_sweep(std::uint64_t seed) {
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(derive_seed(seed, 1000 + i));
    const std::size_t n = 1 + rng.below(3);
    const auto f = DynSystem::FiniteMap(random_finite_space(rng, n), random_map(rng, n));
    const std::size_t ell = 1 + rng.below(2);
    const auto r = check_fuzzy_equivalence(f, ell, FamilySpec::InfiniteExact(), 2);
    const bool same = r.verdict("hyperspace").holds == r.verdict("fuzzy_sup").holds &&
                      r.verdict("fuzzy_sup").holds == r.verdict("fuzzy_skorokhod").holds;
    if (!r.agreement || !same) {
      if (bad++ == 0) first = "; first disagreement on " + r.system;
    }
  }
  return {bad == 0, count_line(bad, 50, "systems agree") + first};
}

MetricSpace any_space(Rng& rng) {
  switch (rng.below(3)) {
    case 0:
      return random_finite_space(rng, 1 + rng.below(5));
    case 1:
      return MetricSpace::Circle();
    default:
      return MetricSpace::Product({MetricSpace::Circle(), random_line_space(rng, 3)});
  }
}

Outcome union_bound(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 3));
  std::size_t bad = 0;
  double slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 10000; ++i) {
    const auto x = any_space(rng);
    const auto a = random_compact(rng, x, 4);
    const auto b = random_compact(rng, x, 4);
    const auto c = random_compact(rng, x, 4);
    const auto d = random_compact(rng, x, 4);
    const double lhs = hausdorff(set_union(a, b), set_union(c, d));
    const double rhs = std::max(hausdorff(a, c), hausdorff(b, d));
    const double ref = verify::brute_hausdorff(x, set_union(a, b).points(),
                                               set_union(c, d).points());
    if (!(lhs <= rhs + kTolerance) || std::fabs(lhs - ref) > kTolerance) ++bad;
    slack = std::min(slack, rhs - lhs);
  }
  return {bad == 0, count_line(bad, 10000, "quadruples satisfy the bound") +
                        "; smallest slack " + fmt(slack)};
}

Outcome zadeh_suite(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 4));
  std::size_t level_bad = 0, iter_bad = 0, chi_bad = 0, le_bad = 0, eq_bad = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.below(5);
    const auto x = random_finite_space(rng, n);
    const auto f = DynSystem::FiniteMap(x, random_map(rng, n));
    const auto u = random_step_fuzzy(rng, x, 4);
    const auto fu = zadeh_apply(f, u);
    const auto ref = verify::brute_zadeh_values(f, u);
    for (double a : u.levels()) {
      std::vector<Point> cut;
      for (std::size_t y = 0; y < n; ++y) {
        if (ref[y] >= a) cut.push_back(Point{Coord(static_cast<double>(y))});
      }
      if (!(CompactSet(x, cut) == level_set(fu, a)) ||
          !(level_set(fu, a) == hyper_apply(f, level_set(u, a)))) {
        ++level_bad;
      }
    }
    const auto k = random_subset(rng, x);
    if (!(zadeh_apply(f, StepFuzzySet::Characteristic(k)) ==
          StepFuzzySet::Characteristic(hyper_apply(f, k)))) {
      ++chi_bad;
    }
  }
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.below(5);
    const auto x = random_finite_space(rng, n);
    const auto f = DynSystem::FiniteMap(x, random_map(rng, n));
    const auto u = random_step_fuzzy(rng, x, 4);
    StepFuzzySet step = u;
    for (std::uint64_t t = 1; t <= 16; ++t) {
      step = zadeh_apply(f, step);
      if (!(step == zadeh_iterate(f, u, t))) ++iter_bad;
    }
  }
  for (std::size_t i = 0; i < 10000; ++i) {
    const auto x = random_finite_space(rng, 1 + rng.below(4));
    const auto u = random_step_fuzzy(rng, x, 3);
    const auto v = random_step_fuzzy(rng, x, 3);
    if (!(d_skorokhod(u, v) <= d_inf(u, v) + kTolerance)) ++le_bad;
    const auto chi = StepFuzzySet::Characteristic(random_subset(rng, x));
    if (std::fabs(d_skorokhod(chi, v) - d_inf(chi, v)) > 1e-6) ++eq_bad;
  }
  const bool ok = level_bad + iter_bad + chi_bad + le_bad + eq_bad == 0;
  return {ok, "level cuts " + std::to_string(level_bad) + " bad, iterates " +
                  std::to_string(iter_bad) + " bad, characteristic " + std::to_string(chi_bad) +
                  " bad, d0<=dinf " + std::to_string(le_bad) + " bad, d0=dinf on chi " +
                  std::to_string(eq_bad) + " bad"};
}

Outcome skorokhod_oracle(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 5));
  std::size_t bad = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    const auto x = random_finite_space(rng, 1 + rng.below(4));
    const auto u = random_step_fuzzy(rng, x, 3);
    const auto v = random_step_fuzzy(rng, x, 3);
    const double gap = std::fabs(d_skorokhod(u, v) - verify::brute_skorokhod(u, v));
    worst = std::max(worst, gap);
    if (gap > 1e-2) ++bad;
  }
  return {bad == 0, count_line(bad, 100, "instances within 1e-2") + "; largest gap " + fmt(worst)};
}

Outcome stratify_check(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 6));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto x = random_line_space(rng, 1 + rng.below(5));
    const auto u = random_step_fuzzy(rng, x, 5);
    const double eps = rng.uniform(0.01, 1.5);
    const auto a = stratify(u, eps);
    bool ok = a.front() == 0.0 && a.back() == 1.0;
    for (std::size_t k = 0; k + 1 < a.size() && ok; ++k) {
      const auto& top = level_set(u, a[k + 1]).points();
      for (double b : u.levels()) {
        if (b > a[k] && b <= a[k + 1]) {
          ok = ok && verify::brute_hausdorff(x, level_set(u, b).points(), top) < eps;
        }
      }
    }
    if (!ok) ++bad;
  }
  return {bad == 0, count_line(bad, 1000, "stratifications hold")};
}

Outcome golden_rigidity(std::uint64_t) {
  const long double theta = verify::golden();
  const auto rot = DynSystem::Rotation(static_cast<double>(theta));
  std::vector<Point> sample;
  for (int i = 0; i < 20; ++i) sample.push_back(Point{Coord(i / 20.0)});
  const auto schedule = default_eps_schedule();
  const auto q = quasi_rigidity_search(rot, sample, schedule, 100000);
  const auto cf = verify::convergents(theta, 1000000);

  std::string seq;
  for (auto t : q.times) seq += (seq.empty() ? "" : ",") + std::to_string(t);
  bool ok = true;
  std::string missing;
  for (std::uint64_t want : {13, 21, 34, 55, 89, 144}) {
    if (std::find(q.times.begin(), q.times.end(), want) == q.times.end()) {
      ok = false;
      const double r = static_cast<double>(verify::circle_norm(theta, want));
      missing += " " + std::to_string(want) + " (|q theta| = " + fmt(r);
      // Schedule is decreasing; locate the tolerances around r.
      std::size_t hi = schedule.size();
      for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] > r) hi = i;
      }
      if (hi + 1 < schedule.size()) {
        missing += " lies in [" + fmt(schedule[hi + 1]) + ", " + fmt(schedule[hi]) + ")";
        if (hi < q.times.size()) {
          missing += "; " + fmt(schedule[hi]) + " was already met at " +
                     std::to_string(q.times[hi]);
        }
      }
      missing += ")";
    }
  }
  std::size_t residual_bad = 0;
  for (std::size_t i = 0; i < q.times.size(); ++i) {
    const long double ref = verify::circle_norm(theta, q.times[i]);
    if (std::fabs(static_cast<long double>(q.residuals[i]) - ref) > 1e-9L) ++residual_bad;
    for (std::size_t k = 0; k + 1 < cf.size(); ++k) {
      if (cf[k].q == q.times[i] && !(cf[k].residual < 1.0L / cf[k + 1].q)) ++residual_bad;
    }
  }
  ok = ok && residual_bad == 0;
  std::string detail = "sequence " + seq;
  if (!missing.empty()) detail += "; missing" + missing;
  detail += "; residual mismatches " + std::to_string(residual_bad);
  return {ok, detail};
}

Outcome doubling_multiple(std::uint64_t seed) {
  const auto d = DynSystem::Doubling();
  const auto third = Coord::Rational(1, 3);
  const auto u = OpenSet::Balls({Ball{Point{third}, std::ldexp(1.0, -6)}});
  SamplingOptions opts;
  opts.seed = seed;
  bool ok = true;
  std::string detail;
  for (std::size_t ell = 1; ell <= 3; ++ell) {
    const auto w = ell_return_set(d, u, ell, 512, opts);
    std::size_t missing = 0;
    for (std::uint64_t n = 2; n <= 512; n += 2) missing += w.contains(n) ? 0 : 1;
    const bool ap = family_eval(w, FamilySpec::ContainsAP(8)).holds;
    const bool line_ok = missing == 0 && ap && w.semantics() == Semantics::kWitnessed;
    ok = ok && line_ok;
    detail += (detail.empty() ? "" : "; ") + std::string("ell ") + std::to_string(ell) + ": " +
              std::to_string(w.members().size()) + " members, " + std::to_string(missing) +
              " even times missing, AP(8) " + (ap ? "yes" : "no");
  }
  return {ok, detail};
}

Outcome negative_control(std::uint64_t) {
  const auto f = DynSystem::FiniteMap({1, 1});
  const auto probe = OpenSet::Subset({0});
  std::vector<std::string> wrong;
  for (std::size_t ell = 1; ell <= 3; ++ell) {
    const auto w = ell_return_set(f, probe, ell, 64);
    if (family_eval(w, FamilySpec::InfiniteExact()).holds) wrong.push_back("base");
  }
  const DynSystem hyper = materialize_hyperspace(f);
  // State 0 is the compact set {0}.
  const auto hw = ell_return_set(hyper, OpenSet::Subset({0}), 1, 64);
  if (family_eval(hw, FamilySpec::InfiniteExact()).holds) wrong.push_back("hyperspace");
  const FuzzyGrid grid = materialize_fuzzy_grid(f, 2);
  const auto chi = StepFuzzySet::Characteristic(CompactSet(f.space(), {Point{Coord(0.0)}}));
  for (std::size_t i = 0; i < grid.sets.size(); ++i) {
    if (!(grid.sets[i] == chi)) continue;
    for (const auto* sys : {&grid.sup_system, &grid.skorokhod_system}) {
      const auto w = ell_return_set(*sys, OpenSet::Subset({i}), 1, 64);
      if (family_eval(w, FamilySpec::InfiniteExact()).holds) wrong.push_back("fuzzy");
    }
  }
  for (std::uint64_t n = 1; n <= 64; ++n) {
    if (hyper_rec_witness(f, VietorisOpen({probe}), n, 1)) wrong.push_back("compact witness");
    if (fuzzy_rec_witness(f, chi, 0.5, n, 1)) wrong.push_back("fuzzy witness");
  }
  const auto k = check_compact_equivalence(f, 1, FamilySpec::InfiniteExact(), 3);
  const auto z = check_fuzzy_equivalence(f, 1, FamilySpec::InfiniteExact(), 2);
  for (const auto* r : {&k, &z}) {
    for (const auto& v : r->verdicts) {
      if (v.holds) wrong.push_back(v.statement);
    }
  }
  std::string detail = wrong.empty() ? "every level rejects probe {0}" : "recurrent at:";
  for (const auto& w : wrong) detail += " " + w;
  return {wrong.empty(), detail};
}

Outcome transport(std::uint64_t seed) {
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(derive_seed(seed, 10000 + i));
    const std::size_t n = 1 + rng.below(4);
    std::vector<std::size_t> perm(n);
    for (std::size_t s = 0; s < n; ++s) perm[s] = s;
    for (std::size_t s = n; s-- > 1;) std::swap(perm[s], perm[rng.below(s + 1)]);
    const auto f = DynSystem::FiniteMap(random_finite_space(rng, n), perm);
    const auto k = random_subset(rng, f.space());
    const double eps = rng.uniform(0.05, 1.0);
    const std::uint64_t t = *f.cycles().period * (1 + rng.below(3));
    const std::size_t ell = 1 + rng.below(3);
    const auto r = transport_witnesses(f, k, eps, t, ell);
    if (!r.closed && bad++ == 0) first = "; first failure: " + r.detail;
  }
  return {bad == 0, count_line(bad, 100, "chains close") + first};
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "compact-set recurrence agrees with product recurrence", 60.0, compact_sweep},
      {2, "fuzzy recurrence agrees under both fuzzy metrics", 300.0, fuzzy_sweep},
      {3, "Hausdorff distance of unions is bounded by the parts", 600.0, union_bound},
      {4, "Zadeh extension commutes with level cuts and iterates", 600.0, zadeh_suite},
      {5, "Skorokhod distance matches the lattice brute force", 600.0, skorokhod_oracle},
      {6, "stratification keeps merged levels within eps", 600.0, stratify_check},
      {7, "golden rotation rigidity times are Fibonacci denominators", 10.0, golden_rigidity},
      {8, "doubling map returns near 1/3 at every even time", 600.0, doubling_multiple},
      {9, "wandering absorber is non-recurrent at every level", 600.0, negative_control},
      {10, "witnesses transport from points to fuzzy sets and back", 600.0, transport},
  };
  return all;
}

std::vector<CriterionResult> run_criteria(std::uint64_t seed, std::span<const int> ids) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(seed);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.passed = false;
      o.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
    }
    out.push_back({c.id, c.title, o.passed, o.detail, secs});
  }
  return out;
}

}  // namespace hyperrec::acceptance

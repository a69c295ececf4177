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

#include "hyperrec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace hyperrec {

const StatementVerdict& EquivalenceReport::verdict(const std::string& statement) const {
  for (const auto& v : verdicts) {
    if (v.statement == statement) return v;
  }
  throw std::out_of_range("report has no statement " + statement);
}

namespace {

void finalize(EquivalenceReport& r) {
  r.agreement = std::all_of(r.verdicts.begin(), r.verdicts.end(), [&](const StatementVerdict& v) {
    return v.holds == r.verdicts.front().holds;
  });
}

void require_small_finite(const DynSystem& sys, std::size_t max_points) {
  if (sys.kind() != DynSystem::Kind::kFiniteMap) {
    throw std::invalid_argument("exhaustive checks need a finite map, got " + sys.describe());
  }
  if (sys.space().size() > max_points) {
    throw std::invalid_argument("finite system has " + std::to_string(sys.space().size()) +
                                " points; the exhaustive check allows at most " +
                                std::to_string(max_points));
  }
}

std::size_t distinct_cycle_lengths(const CycleStructure& c) {
  const auto lengths = c.cycle_lengths();
  return std::set<std::size_t>(lengths.begin(), lengths.end()).size();
}

// Conjunction of is_rec_system over the N-fold products, N = 1..count.
StatementVerdict products_verdict(const std::string& name, const DynSystem& sys,
                                  std::size_t ell, const FamilySpec& spec, std::size_t count,
                                  bool exact, std::vector<std::string>& payloads) {
  StatementVerdict out{name, true, exact ? "exact" : "probed", ""};
  for (std::size_t n = 1; n <= count; ++n) {
    const DynSystem prod = n == 1 ? sys : n_fold(sys, n);
    const auto probes = singleton_probes(prod.space());
    const auto v = is_rec_system(prod, probes, ell, spec, kOracleHorizon);
    if (!v.holds) {
      out.holds = false;
      for (const auto& p : v.probes) {
        if (!p.verdict.holds) {
          payloads.push_back(name + " fails for N = " + std::to_string(n) + " at probe " +
                             p.probe + ": " + p.verdict.diagnostic);
          break;
        }
      }
      break;
    }
  }
  out.detail = "N = 1.." + std::to_string(count);
  return out;
}

StatementVerdict finite_verdict(const std::string& name, const DynSystem& sys,
                                std::size_t ell, const FamilySpec& spec,
                                std::vector<std::string>& payloads) {
  const auto probes = exhaustive_ball_probes(sys.space());
  const auto v = is_rec_system(sys, probes, ell, spec, kOracleHorizon);
  StatementVerdict out{name, v.holds, v.exhaustive ? "exact" : "probed",
                       std::to_string(probes.size()) + " ball probes"};
  if (!v.holds) {
    for (const auto& p : v.probes) {
      if (!p.verdict.holds) {
        payloads.push_back(name + " fails at probe " + p.probe + ": " + p.verdict.diagnostic);
        break;
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Materialization

DynSystem materialize_hyperspace(const DynSystem& sys) {
  require_small_finite(sys, 10);
  const auto all = enumerate_compacts(sys.space(), 10);
  const std::size_t n = all.size();
  std::vector<std::size_t> table(n);
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    table[s] = hyper_apply(sys, all[s]).mask() - 1;
    for (std::size_t t = 0; t < n; ++t) d[s][t] = hausdorff(all[s], all[t]);
  }
  return DynSystem::FiniteMap(MetricSpace::Finite(std::move(d)), std::move(table));
}

FuzzyGrid materialize_fuzzy_grid(const DynSystem& sys, std::size_t m) {
  require_small_finite(sys, 4);
  if (m == 0) throw std::invalid_argument("fuzzy grid needs m >= 1");
  const MetricSpace& x = sys.space();
  const std::size_t n = x.size();
  const std::size_t base = m + 1;
  std::size_t codes = 1;
  for (std::size_t i = 0; i < n; ++i) codes *= base;

  auto digits = [&](std::size_t code) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = code % base;
      code /= base;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::size_t>& v) {
    std::size_t code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * base + v[i];
    return code;
  };

  std::map<std::size_t, std::size_t> index;
  std::vector<std::vector<std::size_t>> values;
  for (std::size_t code = 0; code < codes; ++code) {
    const auto v = digits(code);
    if (*std::max_element(v.begin(), v.end()) != m) continue;
    index[code] = values.size();
    values.push_back(v);
  }

  FuzzyGrid grid{{}, {}, sys, sys};
  for (const auto& v : values) {
    std::vector<double> levels;
    std::vector<CompactSet> sets;
    for (std::size_t k = 1; k <= m; ++k) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] >= k) pts.push_back(Point{Coord(static_cast<double>(i))});
      }
      if (pts.empty()) continue;
      CompactSet s(x, std::move(pts));
      if (!sets.empty() && sets.back() == s) {
        levels.back() = static_cast<double>(k) / static_cast<double>(m);
        continue;
      }
      levels.push_back(static_cast<double>(k) / static_cast<double>(m));
      sets.push_back(std::move(s));
    }
    levels.back() = 1.0;
    grid.sets.emplace_back(std::move(levels), std::move(sets));
    std::vector<std::size_t> image(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t y = sys.table()[i];
      image[y] = std::max(image[y], v[i]);
    }
    grid.table.push_back(index.at(encode(image)));
  }

  const std::size_t g = grid.sets.size();
  std::vector<std::vector<double>> sup(g, std::vector<double>(g, 0.0));
  std::vector<std::vector<double>> sko(g, std::vector<double>(g, 0.0));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      sup[i][j] = sup[j][i] = d_inf(grid.sets[i], grid.sets[j]);
      sko[i][j] = sko[j][i] = d_skorokhod(grid.sets[i], grid.sets[j]);
    }
  }
  grid.sup_system = DynSystem::FiniteMap(MetricSpace::Finite(std::move(sup)), grid.table);
  grid.skorokhod_system = DynSystem::FiniteMap(MetricSpace::Finite(std::move(sko)), grid.table);
  return grid;
}

std::vector<OpenSet> exhaustive_ball_probes(const MetricSpace& space) {
  if (space.kind() != MetricSpace::Kind::kFinite) {
    throw std::invalid_argument("exhaustive ball probes need a finite space");
  }
  const std::size_t n = space.size();
  std::vector<OpenSet> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<double> radii;
    for (std::size_t j = 0; j < n; ++j) radii.push_back(space.table_distance(c, j));
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const double r = k + 1 < radii.size() ? 0.5 * (radii[k] + radii[k + 1]) : radii[k] + 1.0;
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < n; ++j) {
        if (space.table_distance(c, j) < r) members.push_back(j);
      }
      if (!seen.insert(members).second) continue;
      out.push_back(OpenSet::Balls({Ball{Point{Coord(static_cast<double>(c))}, r}}));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence checks

EquivalenceReport check_compact_equivalence(const DynSystem& sys, std::size_t ell,
                                            const FamilySpec& spec, std::size_t n_max) {
  require_small_finite(sys, 5);
  if (ell == 0 || ell > 3) throw std::invalid_argument("ell must lie in 1..3");
  if (n_max == 0 || n_max > 3) throw std::invalid_argument("N_max must lie in 1..3");
  if (!spec.exact()) throw std::invalid_argument("exhaustive checks need an exact family");

  EquivalenceReport r;
  r.system = sys.describe();
  r.check = "compact_sets";

  const std::size_t needed = distinct_cycle_lengths(sys.cycles());
  r.verdicts.push_back(products_verdict("products", sys, ell, spec, std::min(needed, n_max),
                                        needed <= n_max, r.payloads));

  const DynSystem hyper = materialize_hyperspace(sys);
  r.verdicts.push_back(finite_verdict("hyperspace", hyper, ell, spec, r.payloads));

  if (hyper.space().size() <= 15) {
    const std::size_t hyper_needed = distinct_cycle_lengths(hyper.cycles());
    r.verdicts.push_back(products_verdict("hyperspace_products", hyper, ell, spec,
                                          std::min<std::size_t>(hyper_needed, 2),
                                          hyper_needed <= 2, r.payloads));
  }
  finalize(r);
  return r;
}

EquivalenceReport check_fuzzy_equivalence(const DynSystem& sys, std::size_t ell,
                                          const FamilySpec& spec, std::size_t m) {
  require_small_finite(sys, 3);
  if (m == 0 || m > 3) throw std::invalid_argument("level grid size must lie in 1..3");
  EquivalenceReport r = check_compact_equivalence(sys, ell, spec, 3);
  r.check = "fuzzy_sets";

  const FuzzyGrid grid = materialize_fuzzy_grid(sys, m);
  r.verdicts.push_back(finite_verdict("fuzzy_sup", grid.sup_system, ell, spec, r.payloads));
  r.verdicts.push_back(
      finite_verdict("fuzzy_skorokhod", grid.skorokhod_system, ell, spec, r.payloads));

  if (r.verdict("fuzzy_sup").holds) {
    // Transport a witness for the grid set with the most levels.
    std::size_t pick = 0;
    for (std::size_t i = 0; i < grid.sets.size(); ++i) {
      if (grid.sets[i].size() > grid.sets[pick].size()) pick = i;
    }
    const auto w = ell_return_set(grid.sup_system, OpenSet::Subset({pick}), ell, kOracleHorizon);
    const auto& members = w.members();
    const auto it = std::find_if(members.begin(), members.end(),
                                 [](std::uint64_t t) { return t > 0; });
    StatementVerdict sv{"fuzzy_witness", false, "exact", ""};
    if (it != members.end()) {
      const auto v = fuzzy_rec_witness(sys, grid.sets[pick], 0.5, *it, ell);
      sv.holds = v.has_value();
      sv.detail = "n = " + std::to_string(*it);
      if (v) {
        r.payloads.push_back("fuzzy witness for " + grid.sets[pick].to_string() + " at n = " +
                             std::to_string(*it) + ": " + v->to_string());
      }
    }
    r.verdicts.push_back(std::move(sv));
  }
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Witness transport

TransportResult transport_witnesses(const DynSystem& sys, const CompactSet& k, double eps,
                                    std::uint64_t n, std::size_t ell,
                                    const SamplingOptions& options) {
  const MetricSpace& space = sys.space();
  TransportResult out;
  auto fail = [&](std::string why) {
    out.closed = false;
    out.detail = std::move(why);
    return out;
  };

  // Base level: one point per ball around each point of K.
  std::vector<OpenSet> opens;
  std::vector<Point> base;
  for (const auto& c : k.points()) {
    const OpenSet u = OpenSet::Balls({Ball{c, eps}});
    opens.push_back(u);
    std::optional<Point> found;
    SamplingOptions sub = options;
    if (space.is_finite()) sub.budget = space.cardinality();
    for (const auto& x : sample_open(space, u, sub)) {
      bool ok = true;
      for (std::size_t j = 0; j <= ell && ok; ++j) {
        ok = open_contains(space, u, sys.iterate(x, j * n));
      }
      if (ok) {
        found = x;
        break;
      }
    }
    if (!found) return fail("no base witness near " + to_string(std::span<const Coord>(c)));
    base.push_back(*found);
  }

  // Compact level: the assembled base points, and the search-built witness.
  const VietorisOpen v(opens);
  const CompactSet assembled(space, base);
  for (std::size_t j = 0; j <= ell; ++j) {
    if (!vietoris_contains(v, hyper_iterate(sys, assembled, j * n))) {
      return fail("assembled compact witness leaves " + v.describe());
    }
  }
  const auto hyper = hyper_rec_witness(sys, v, n, ell, options);
  if (!hyper) return fail("no compact witness in " + v.describe());

  // Fuzzy level and back down.
  const StepFuzzySet chi = StepFuzzySet::Characteristic(k);
  const auto fuzzy = fuzzy_rec_witness(sys, chi, eps, n, ell, options);
  if (!fuzzy) return fail("no fuzzy witness for " + chi.to_string());
  const CompactSet top = fuzzy_to_hyper_witness(*fuzzy);
  for (std::size_t j = 0; j <= ell; ++j) {
    const StepFuzzySet moved = zadeh_iterate(sys, *fuzzy, j * n);
    const double d0 = d_skorokhod(chi, moved);
    const double di = d_inf(chi, moved);
    const double dh = hausdorff(k, hyper_iterate(sys, top, j * n));
    if (!(d0 <= di + kTolerance && di < eps && dh <= d0 + kTolerance && dh < eps)) {
      return fail("inequality chain breaks at j = " + std::to_string(j));
    }
  }
  out.closed = true;
  out.detail = "base " + assembled.to_string() + " -> compact " + hyper->to_string() +
               " -> fuzzy " + fuzzy->to_string() + " -> top " + top.to_string();
  return out;
}

// ---------------------------------------------------------------------------
// Point recurrence descent

namespace {

double min_distance(const MetricSpace& space) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i != j) best = std::min(best, space.table_distance(i, j));
    }
  }
  return std::isfinite(best) ? best : 1.0;
}

// The first `count` reduced fractions p/q with q odd, in order of q.
std::vector<Coord> odd_rationals(std::size_t count) {
  std::vector<Coord> out;
  for (std::int64_t q = 1; out.size() < count; q += 2) {
    for (std::int64_t p = 0; p < q && out.size() < count; ++p) {
      if (std::gcd(p, q) == 1 || (p == 0 && q == 1)) out.push_back(Coord::Rational(p, q));
    }
  }
  return out;
}

void append_grid_point(const MetricSpace& space, const std::vector<Coord>& rationals,
                       std::size_t i, Point& out) {
  switch (space.kind()) {
    case MetricSpace::Kind::kFinite:
      out.emplace_back(static_cast<double>(i % space.size()));
      return;
    case MetricSpace::Kind::kCircle:
      out.push_back(rationals[i % rationals.size()]);
      return;
    case MetricSpace::Kind::kProduct: {
      std::size_t shift = 0;
      for (const auto& f : space.factors()) {
        append_grid_point(f, rationals, i + shift, out);
        shift += 7;
      }
      return;
    }
  }
}

std::vector<Point> descent_sample(const MetricSpace& space, std::size_t count) {
  const auto rationals = odd_rationals(count);
  std::vector<Point> out;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    append_grid_point(space, rationals, i, p);
    out.push_back(std::move(p));
  }
  return out;
}

// Window of times n <= H satisfying pred, with AP statistics.
PointRecurrence window_of(std::uint64_t horizon, Semantics semantics,
                          const std::function<bool(std::uint64_t)>& pred) {
  std::vector<std::uint64_t> members;
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    if (pred(n)) members.push_back(n);
  }
  PointRecurrence out{ReturnWindow(horizon, std::move(members), semantics), {}, 0};
  for (std::size_t len = 2; len <= kMaxApLength; ++len) {
    const bool found = family_eval(out.window, FamilySpec::ContainsAP(len)).holds;
    out.ap.push_back(found);
    if (found) out.max_ap = len;
  }
  return out;
}

std::optional<std::uint64_t> first_positive(const ReturnWindow& w) {
  for (std::uint64_t n : w.members()) {
    if (n > 0) return n;
  }
  return std::nullopt;
}

// Every state of a finite system is recurrent (or AP-recurrent).
StatementVerdict all_states(const std::string& name, const DynSystem& sys, DescentMode mode,
                            const DescentBudgets& b) {
  const double eps = 0.5 * min_distance(sys.space());
  StatementVerdict out{name, true, "exact", ""};
  for (std::size_t s = 0; s < sys.space().size(); ++s) {
    const auto r = point_recurrence(sys, Point{Coord(static_cast<double>(s))}, eps, b.horizon);
    const bool ok = mode == DescentMode::kAP
                        ? r.max_ap >= b.ap_target
                        : family_eval(r.window, FamilySpec::InfiniteExact()).holds;
    if (!ok) {
      out.holds = false;
      out.detail = "state " + std::to_string(s) + " does not return";
      break;
    }
  }
  if (mode == DescentMode::kAP) out.semantics = "windowed";
  return out;
}

// Quasi-rigidity of a finite system over all its states.
StatementVerdict rigid_states(const std::string& name, const DynSystem& sys,
                              std::span<const double> schedule, const DescentBudgets& b) {
  std::vector<Point> all;
  for (std::size_t s = 0; s < sys.space().size(); ++s) {
    all.push_back(Point{Coord(static_cast<double>(s))});
  }
  const auto q = quasi_rigidity_search(sys, all, schedule, b.horizon);
  return {name, q.served == schedule.size(), "windowed",
          std::to_string(q.served) + " of " + std::to_string(schedule.size()) + " tolerances"};
}

std::vector<double> descent_schedule(double eps) {
  std::vector<double> out;
  for (int k = 0; k < 6; ++k) out.push_back(eps * std::ldexp(1.0, -k));
  return out;
}

EquivalenceReport finite_descent(const DynSystem& sys, DescentMode mode,
                                 const DescentBudgets& b) {
  require_small_finite(sys, 4);
  EquivalenceReport r;
  r.system = sys.describe();
  const DynSystem hyper = materialize_hyperspace(sys);
  const FuzzyGrid grid = materialize_fuzzy_grid(sys, b.grid_levels);
  if (mode == DescentMode::kQuasiRigid) {
    const auto schedule = descent_schedule(b.eps);
    r.verdicts.push_back(rigid_states("base", sys, schedule, b));
    r.verdicts.push_back(rigid_states("hyperspace", hyper, schedule, b));
    r.verdicts.push_back(rigid_states("fuzzy", grid.sup_system, schedule, b));
  } else {
    r.verdicts.push_back(all_states("base", sys, mode, b));
    r.verdicts.push_back(all_states("hyperspace", hyper, mode, b));
    r.verdicts.push_back(all_states("fuzzy", grid.sup_system, mode, b));
  }

  // Transport from every base state at its first return time.
  const double eps = 0.5 * min_distance(sys.space());
  StatementVerdict tv{"transport", true, "exact", ""};
  for (std::size_t s = 0; s < sys.space().size(); ++s) {
    const Point x{Coord(static_cast<double>(s))};
    const auto n = first_positive(point_recurrence(sys, x, eps, b.horizon).window);
    if (!n) {
      tv.holds = false;
      tv.detail = "state " + std::to_string(s) + " has no return time";
      break;
    }
    const auto t = transport_witnesses(sys, CompactSet(sys.space(), {x}), eps, *n, 1, b.sampling);
    if (!t.closed) {
      tv.holds = false;
      tv.detail = t.detail;
      break;
    }
    if (s == 0) r.payloads.push_back(t.detail);
  }
  r.verdicts.push_back(std::move(tv));
  return r;
}

EquivalenceReport continuous_descent(const DynSystem& sys, DescentMode mode,
                                     const DescentBudgets& b) {
  const MetricSpace& space = sys.space();
  EquivalenceReport r;
  r.system = sys.describe();
  const auto sample = descent_sample(space, b.sample_points);
  const CompactSet k(space, sample);
  const StepFuzzySet u({0.5, 1.0}, {k, CompactSet(space, {sample.front()})});

  auto hyper_gap = [&](std::uint64_t n) { return hausdorff(hyper_iterate(sys, k, n), k); };
  auto fuzzy_gap = [&](std::uint64_t n) { return d_inf(zadeh_iterate(sys, u, n), u); };

  if (mode == DescentMode::kQuasiRigid) {
    const auto schedule = descent_schedule(b.eps);
    const auto q = quasi_rigidity_search(sys, sample, schedule, b.horizon);
    r.verdicts.push_back({"base", q.served == schedule.size(), "witnessed",
                          std::to_string(q.served) + " of " + std::to_string(schedule.size()) +
                              " tolerances"});
    bool hyper_ok = q.served == schedule.size();
    bool fuzzy_ok = hyper_ok;
    for (std::size_t i = 0; i < q.times.size(); ++i) {
      hyper_ok = hyper_ok && hyper_gap(q.times[i]) < schedule[i];
      fuzzy_ok = fuzzy_ok && fuzzy_gap(q.times[i]) < schedule[i];
    }
    std::string times;
    for (auto t : q.times) times += (times.empty() ? "" : ",") + std::to_string(t);
    r.payloads.push_back("rigidity times " + times);
    r.verdicts.push_back({"hyperspace", hyper_ok, "witnessed", "same times on the sample set"});
    r.verdicts.push_back({"fuzzy", fuzzy_ok, "witnessed", "same times on a two-level set"});
  } else {
    StatementVerdict base{"base", true, "witnessed", ""};
    for (const auto& x : sample) {
      const auto pr = point_recurrence(sys, x, b.eps, b.horizon);
      const bool ok = mode == DescentMode::kAP ? pr.max_ap >= b.ap_target
                                               : first_positive(pr.window).has_value();
      if (!ok) {
        base.holds = false;
        base.detail = "no return witnessed for " + to_string(std::span<const Coord>(x));
        break;
      }
    }
    r.verdicts.push_back(std::move(base));
    auto level = [&](const std::string& name, const std::function<double(std::uint64_t)>& gap) {
      const auto w = window_of(b.horizon, Semantics::kWitnessed,
                               [&](std::uint64_t n) { return gap(n) < b.eps; });
      const bool ok = mode == DescentMode::kAP ? w.max_ap >= b.ap_target
                                               : first_positive(w.window).has_value();
      return StatementVerdict{name, ok, "witnessed",
                              "longest progression " + std::to_string(w.max_ap)};
    };
    r.verdicts.push_back(level("hyperspace", hyper_gap));
    r.verdicts.push_back(level("fuzzy", fuzzy_gap));
  }

  // Transport at the first time every sample point is back within eps/2 of
  // itself, so that each point witnesses its own ball.
  StatementVerdict tv{"transport", false, "witnessed", "no return within eps/2"};
  auto pointwise_gap = [&](std::uint64_t n) {
    double worst = 0.0;
    for (const auto& x : sample) worst = std::max(worst, space.distance(sys.iterate(x, n), x));
    return worst;
  };
  for (std::uint64_t n = 1; n <= b.horizon; ++n) {
    if (pointwise_gap(n) < 0.5 * b.eps) {
      const auto t = transport_witnesses(sys, k, b.eps, n, 1, b.sampling);
      tv.holds = t.closed;
      tv.detail = "n = " + std::to_string(n) + (t.closed ? "" : ": " + t.detail);
      if (t.closed) r.payloads.push_back(t.detail);
      break;
    }
  }
  r.verdicts.push_back(std::move(tv));
  return r;
}

}  // namespace

EquivalenceReport check_point_rec_descent(const DynSystem& sys, DescentMode mode,
                                          const DescentBudgets& budgets) {
  EquivalenceReport r = sys.kind() == DynSystem::Kind::kFiniteMap
                            ? finite_descent(sys, mode, budgets)
                            : continuous_descent(sys, mode, budgets);
  switch (mode) {
    case DescentMode::kPoint:
      r.check = "point_recurrence";
      break;
    case DescentMode::kAP:
      r.check = "ap_recurrence";
      break;
    case DescentMode::kQuasiRigid:
      r.check = "quasi_rigidity";
      break;
  }
  finalize(r);
  return r;
}

}  // namespace hyperrec

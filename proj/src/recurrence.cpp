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

#include "hyperrec/recurrence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hyperrec/errors.hpp"

namespace hyperrec {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::kExact:
      return "exact";
    case Semantics::kWindowed:
      return "windowed";
    case Semantics::kWitnessed:
      return "witnessed";
  }
  return "unknown";
}

bool Certificate::member(std::uint64_t n) const {
  if (n < preperiod) throw std::out_of_range("certificate queried before its preperiod");
  return pattern[(n - preperiod) % period];
}

// ---------------------------------------------------------------------------
// ReturnWindow

ReturnWindow::ReturnWindow(std::uint64_t horizon, std::vector<std::uint64_t> members,
                           Semantics semantics, std::optional<Certificate> certificate)
    : horizon_(horizon),
      members_(std::move(members)),
      semantics_(semantics),
      certificate_(std::move(certificate)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() > horizon_) {
    throw std::invalid_argument("return window member beyond its horizon");
  }
  if (certificate_) {
    const auto& c = *certificate_;
    if (c.period == 0 || c.pattern.size() != c.period) {
      throw std::invalid_argument("malformed return window certificate");
    }
    for (std::uint64_t n = c.preperiod; n <= horizon_; ++n) {
      if (c.member(n) != contains(n)) {
        throw InvariantViolation("certificate disagrees with the window at n = " +
                                 std::to_string(n));
      }
    }
  }
}

bool ReturnWindow::contains(std::uint64_t n) const {
  return std::binary_search(members_.begin(), members_.end(), n);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ReturnWindow::runs() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t n : members_) {
    if (!out.empty() && out.back().first + out.back().second == n) {
      ++out.back().second;
    } else {
      out.emplace_back(n, 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Return sets

namespace {

using Predicate = std::function<bool(std::uint64_t)>;

// Exact window for a finite system. Membership of n >= preperiod only
// depends on n mod period because every iterate involved is f^m with
// m >= preperiod or the identity.
ReturnWindow finite_window(const FiniteView& view, std::uint64_t horizon,
                           const Predicate& member) {
  std::vector<std::uint64_t> members;
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    if (member(n)) members.push_back(n);
  }
  const auto& cyc = view.cycles();
  if (!cyc.period || *cyc.period > kMaxCertifiedPeriod) {
    return ReturnWindow(horizon, std::move(members), Semantics::kWindowed);
  }
  Certificate cert;
  cert.preperiod = cyc.preperiod;
  cert.period = *cyc.period;
  cert.pattern.resize(cert.period);
  for (std::uint64_t r = 0; r < cert.period; ++r) cert.pattern[r] = member(cert.preperiod + r);
  return ReturnWindow(horizon, std::move(members), Semantics::kExact, std::move(cert));
}

std::vector<bool> state_mask(const FiniteView& view, const OpenSet& u) {
  std::vector<bool> mask(view.size(), false);
  for (std::size_t s : view.members(u)) mask[s] = true;
  return mask;
}

void require_nonempty(const std::vector<Point>& samples, const OpenSet& u) {
  if (samples.empty()) throw std::invalid_argument("open set is empty: " + u.describe());
}

}  // namespace

ReturnWindow return_set(const DynSystem& sys, const OpenSet& u, const OpenSet& v,
                        std::uint64_t horizon, const SamplingOptions& options) {
  const MetricSpace& space = sys.space();
  validate_open(space, u);
  validate_open(space, v);
  if (space.is_finite()) {
    const FiniteView view(sys);
    const auto from = view.members(u);
    const auto to = state_mask(view, v);
    if (from.empty()) throw std::invalid_argument("open set is empty: " + u.describe());
    if (view.members(v).empty()) throw std::invalid_argument("open set is empty: " + v.describe());
    return finite_window(view, horizon, [&](std::uint64_t n) {
      return std::any_of(from.begin(), from.end(),
                         [&](std::size_t s) { return to[view.image(s, n)]; });
    });
  }
  const auto samples = sample_open(space, u, options);
  require_nonempty(samples, u);
  require_nonempty(sample_open(space, v, options), v);
  std::vector<bool> hit(horizon + 1, false);
  for (const auto& x : samples) {
    for (std::uint64_t n = 0; n <= horizon; ++n) {
      if (!hit[n] && open_contains(space, v, sys.iterate(x, n))) hit[n] = true;
    }
  }
  std::vector<std::uint64_t> members;
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    if (hit[n]) members.push_back(n);
  }
  return ReturnWindow(horizon, std::move(members), Semantics::kWitnessed);
}

ReturnWindow ell_return_set(const DynSystem& sys, const OpenSet& u, std::size_t ell,
                            std::uint64_t horizon, const SamplingOptions& options) {
  if (ell == 0) throw std::invalid_argument("ell must be at least 1");
  const MetricSpace& space = sys.space();
  validate_open(space, u);
  if (space.is_finite()) {
    const FiniteView view(sys);
    const auto from = view.members(u);
    const auto in_u = state_mask(view, u);
    if (from.empty()) throw std::invalid_argument("open set is empty: " + u.describe());
    return finite_window(view, horizon, [&](std::uint64_t n) {
      return std::any_of(from.begin(), from.end(), [&](std::size_t s) {
        for (std::size_t j = 1; j <= ell; ++j) {
          if (!in_u[view.image(s, j * n)]) return false;
        }
        return true;
      });
    });
  }
  const auto samples = sample_open(space, u, options);
  require_nonempty(samples, u);
  std::vector<bool> hit(horizon + 1, false);
  hit[0] = true;
  const std::uint64_t reach = ell * horizon;
  std::vector<signed char> visits(reach + 1);
  for (const auto& x : samples) {
    std::fill(visits.begin(), visits.end(), -1);
    auto in_u = [&](std::uint64_t m) {
      if (visits[m] < 0) visits[m] = open_contains(space, u, sys.iterate(x, m)) ? 1 : 0;
      return visits[m] == 1;
    };
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      if (hit[n]) continue;
      bool ok = true;
      for (std::size_t j = 1; j <= ell && ok; ++j) ok = in_u(j * n);
      if (ok) hit[n] = true;
    }
  }
  std::vector<std::uint64_t> members;
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    if (hit[n]) members.push_back(n);
  }
  return ReturnWindow(horizon, std::move(members), Semantics::kWitnessed);
}

// ---------------------------------------------------------------------------
// Families

namespace {

std::uint64_t positive(std::uint64_t v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
  return v;
}

}  // namespace

FamilySpec FamilySpec::InfiniteWindow(std::uint64_t min_count) {
  return {Kind::kInfiniteWindow, positive(min_count, "min_count")};
}
FamilySpec FamilySpec::ThickWindow(std::uint64_t run_length) {
  return {Kind::kThickWindow, positive(run_length, "run_length")};
}
FamilySpec FamilySpec::SyndeticWindow(std::uint64_t max_gap) {
  return {Kind::kSyndeticWindow, positive(max_gap, "max_gap")};
}
FamilySpec FamilySpec::ContainsAP(std::uint64_t length) {
  return {Kind::kContainsAP, positive(length, "AP length")};
}

std::string FamilySpec::describe() const {
  switch (kind_) {
    case Kind::kInfiniteExact:
      return "infinite_exact";
    case Kind::kInfiniteWindow:
      return "infinite_window(" + std::to_string(param_) + ")";
    case Kind::kCofiniteExact:
      return "cofinite_exact";
    case Kind::kThickWindow:
      return "thick_window(" + std::to_string(param_) + ")";
    case Kind::kSyndeticWindow:
      return "syndetic_window(" + std::to_string(param_) + ")";
    case Kind::kContainsAP:
      return "contains_ap(" + std::to_string(param_) + ")";
  }
  return "unknown";
}

FamilySpec FamilySpec::Parse(std::string_view text) {
  std::string name;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  }
  std::optional<std::uint64_t> arg;
  if (const auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw std::invalid_argument("bad family spec: " + std::string(text));
    const std::string body = name.substr(open + 1, name.size() - open - 2);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw std::invalid_argument("bad family parameter: " + std::string(text));
    }
    arg = v;
    name.resize(open);
  }
  auto need = [&]() {
    if (!arg) throw std::invalid_argument("family " + name + " needs a parameter");
    return *arg;
  };
  auto none = [&]() {
    if (arg) throw std::invalid_argument("family " + name + " takes no parameter");
  };
  if (name == "infinite_exact") return none(), InfiniteExact();
  if (name == "cofinite_exact") return none(), CofiniteExact();
  if (name == "infinite_window") return InfiniteWindow(need());
  if (name == "thick_window") return ThickWindow(need());
  if (name == "syndetic_window") return SyndeticWindow(need());
  if (name == "contains_ap") return ContainsAP(need());
  throw std::invalid_argument("unknown family: " + std::string(text));
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_progression(const ReturnWindow& w,
                                                                        std::uint64_t length) {
  const auto& m = w.members();
  if (m.empty()) return std::nullopt;
  if (length == 1) return std::make_pair(m.front(), std::uint64_t{1});
  const std::uint64_t h = w.horizon();
  for (std::uint64_t start : m) {
    for (std::uint64_t d = 1; start + (length - 1) * d <= h; ++d) {
      bool ok = true;
      for (std::uint64_t k = 1; k < length && ok; ++k) ok = w.contains(start + k * d);
      if (ok) return std::make_pair(start, d);
    }
  }
  return std::nullopt;
}

FamilyVerdict family_eval(const ReturnWindow& w, const FamilySpec& spec) {
  FamilyVerdict out;
  const auto& m = w.members();
  const Semantics window_semantics =
      w.semantics() == Semantics::kWitnessed ? Semantics::kWitnessed : Semantics::kWindowed;
  out.semantics = window_semantics;
  switch (spec.kind()) {
    case FamilySpec::Kind::kInfiniteExact:
    case FamilySpec::Kind::kCofiniteExact: {
      if (!w.certificate()) {
        throw std::invalid_argument(spec.describe() + " needs an exactness certificate");
      }
      const auto& c = *w.certificate();
      const auto present = static_cast<std::uint64_t>(
          std::count(c.pattern.begin(), c.pattern.end(), true));
      out.semantics = Semantics::kExact;
      out.holds = spec.kind() == FamilySpec::Kind::kInfiniteExact ? present > 0
                                                                   : present == c.period;
      out.diagnostic = std::to_string(present) + " of " + std::to_string(c.period) +
                       " residues mod " + std::to_string(c.period) + " recur beyond " +
                       std::to_string(c.preperiod);
      return out;
    }
    case FamilySpec::Kind::kInfiniteWindow: {
      const auto count = static_cast<std::uint64_t>(
          std::count_if(m.begin(), m.end(), [](std::uint64_t n) { return n >= 1; }));
      out.holds = count >= spec.param();
      out.diagnostic = std::to_string(count) + " positive members";
      return out;
    }
    case FamilySpec::Kind::kThickWindow: {
      std::uint64_t best = 0;
      for (const auto& [start, len] : w.runs()) best = std::max(best, len);
      out.holds = best >= spec.param();
      out.diagnostic = "longest run " + std::to_string(best);
      return out;
    }
    case FamilySpec::Kind::kSyndeticWindow: {
      // Every block of `g` consecutive integers in [0, H] meets the window.
      const std::uint64_t g = spec.param();
      std::uint64_t worst = 0;
      if (m.empty()) {
        worst = w.horizon() + 1;
      } else {
        worst = m.front() + 1;
        for (std::size_t i = 1; i < m.size(); ++i) worst = std::max(worst, m[i] - m[i - 1]);
        worst = std::max(worst, w.horizon() - m.back() + 1);
      }
      out.holds = worst <= g;
      out.diagnostic = "largest gap " + std::to_string(worst);
      return out;
    }
    case FamilySpec::Kind::kContainsAP: {
      const auto ap = find_progression(w, spec.param());
      out.holds = ap.has_value();
      out.diagnostic = ap ? "start " + std::to_string(ap->first) + " step " +
                                std::to_string(ap->second)
                          : "none within horizon";
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// System-level verdicts

std::vector<OpenSet> singleton_probes(const MetricSpace& space) {
  if (!space.is_finite()) throw std::invalid_argument("singleton probes need a finite space");
  std::vector<OpenSet> out;
  if (space.kind() == MetricSpace::Kind::kFinite) {
    for (std::size_t i = 0; i < space.size(); ++i) out.push_back(OpenSet::Subset({i}));
    return out;
  }
  // Mixed-radix order matching FiniteView: first factor most significant.
  std::vector<std::size_t> sizes;
  for (const auto& f : space.factors()) sizes.push_back(f.cardinality());
  const std::size_t total = space.cardinality();
  for (std::size_t s = 0; s < total; ++s) {
    std::vector<OpenSet> box(sizes.size(), OpenSet::Subset({0}));
    std::size_t rest = s;
    for (std::size_t i = sizes.size(); i-- > 0;) {
      const std::size_t digit = rest % sizes[i];
      rest /= sizes[i];
      if (space.factors()[i].kind() != MetricSpace::Kind::kFinite) {
        throw std::invalid_argument("singleton probes need flat finite factors");
      }
      box[i] = OpenSet::Subset({digit});
    }
    out.push_back(OpenSet::Box(std::move(box)));
  }
  return out;
}

SystemVerdict is_rec_system(const DynSystem& sys, std::span<const OpenSet> probes,
                            std::size_t ell, const FamilySpec& spec, std::uint64_t horizon,
                            const SamplingOptions& options) {
  if (probes.empty()) throw std::invalid_argument("is_rec_system needs at least one probe");
  SystemVerdict out;
  auto weaker = [](Semantics a, Semantics b) {
    return static_cast<int>(a) > static_cast<int>(b) ? a : b;
  };
  for (const auto& u : probes) {
    ReturnWindow w = ell_return_set(sys, u, ell, horizon, options);
    FamilyVerdict v = family_eval(w, spec);
    out.holds = out.holds && v.holds;
    out.semantics = weaker(out.semantics, v.semantics);
    out.probes.push_back({u.describe(), std::move(w), std::move(v)});
  }
  if (sys.space().is_finite()) {
    const FiniteView view(sys);
    std::vector<bool> single(view.size(), false);
    for (const auto& u : probes) {
      const auto members = view.members(u);
      if (members.size() == 1) single[members[0]] = true;
    }
    out.exhaustive = std::all_of(single.begin(), single.end(), [](bool b) { return b; });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witnesses

namespace {

std::vector<Point> candidate_points(const MetricSpace& space, std::span<const OpenSet> opens,
                                    const SamplingOptions& options) {
  // Every witness starts inside one of the opens, so on finite spaces this
  // enumerates all possible witness points.
  std::vector<Point> out;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    SamplingOptions sub = options;
    sub.seed = options.seed + i;
    if (space.is_finite()) sub.budget = space.cardinality();
    for (auto& p : sample_open(space, opens[i], sub)) out.push_back(std::move(p));
  }
  return out;
}

// Picks a small subset of `candidates` hitting every constraint, where
// hits[i][c] tells whether candidate i satisfies constraint c. Greedy cover,
// followed by dropping members that became redundant.
std::optional<std::vector<Point>> cover(const std::vector<Point>& candidates,
                                        const std::vector<std::vector<bool>>& hits,
                                        std::size_t constraints) {
  std::vector<bool> done(constraints, false);
  std::size_t open = constraints;
  std::vector<std::size_t> chosen;
  while (open > 0) {
    std::size_t best = candidates.size();
    std::size_t gain = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::size_t g = 0;
      for (std::size_t c = 0; c < constraints; ++c) g += (!done[c] && hits[i][c]) ? 1 : 0;
      if (g > gain) {
        gain = g;
        best = i;
      }
    }
    if (best == candidates.size()) return std::nullopt;
    chosen.push_back(best);
    for (std::size_t c = 0; c < constraints; ++c) {
      if (!done[c] && hits[best][c]) {
        done[c] = true;
        --open;
      }
    }
  }
  for (std::size_t k = chosen.size(); k-- > 0 && chosen.size() > 1;) {
    bool redundant = true;
    for (std::size_t c = 0; c < constraints && redundant; ++c) {
      if (!hits[chosen[k]][c]) continue;
      bool other = false;
      for (std::size_t m = 0; m < chosen.size() && !other; ++m) {
        other = m != k && hits[chosen[m]][c];
      }
      redundant = other;
    }
    if (redundant) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::vector<Point> out;
  for (std::size_t i : chosen) out.push_back(candidates[i]);
  return out;
}

}  // namespace

std::optional<CompactSet> hyper_rec_witness(const DynSystem& sys, const VietorisOpen& v,
                                            std::uint64_t n, std::size_t ell,
                                            const SamplingOptions& options) {
  const MetricSpace& space = sys.space();
  for (const auto& u : v.opens) validate_open(space, u);
  const std::size_t m = v.opens.size();
  // Candidates whose orbit segment stays inside the union; any subset of
  // them is covered, so only the "meets every open" constraints remain.
  std::vector<Point> keep;
  std::vector<std::vector<bool>> hits;
  for (auto& x : candidate_points(space, v.opens, options)) {
    std::vector<bool> row((ell + 1) * m, false);
    bool ok = true;
    for (std::size_t j = 0; j <= ell && ok; ++j) {
      const Point y = sys.iterate(x, j * n);
      bool any = false;
      for (std::size_t i = 0; i < m; ++i) {
        row[j * m + i] = open_contains(space, v.opens[i], y);
        any = any || row[j * m + i];
      }
      ok = any;
    }
    if (!ok) continue;
    keep.push_back(std::move(x));
    hits.push_back(std::move(row));
  }
  const auto picked = cover(keep, hits, (ell + 1) * m);
  if (!picked) return std::nullopt;
  CompactSet k(space, *picked);
  for (std::size_t j = 0; j <= ell; ++j) {
    if (!vietoris_contains(v, hyper_iterate(sys, k, j * n))) {
      throw InvariantViolation("hyperspace witness " + k.to_string() + " leaves " +
                               v.describe() + " at j = " + std::to_string(j));
    }
  }
  return k;
}

std::optional<CompactSet> hyper_rec_witness(const DynSystem& sys, const CompactSet& center,
                                            double eps, std::uint64_t n, std::size_t ell,
                                            const SamplingOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("ball radius must be positive");
  const MetricSpace& space = sys.space();
  if (!(center.space() == space)) {
    throw std::invalid_argument("ball center is not in the system's space");
  }
  const auto& cs = center.points();
  std::vector<OpenSet> opens;
  for (const auto& c : cs) opens.push_back(OpenSet::Balls({Ball{c, eps}}));
  std::vector<Point> candidates = cs;
  for (auto& p : candidate_points(space, opens, options)) candidates.push_back(std::move(p));
  // Candidates whose orbit segment stays within eps of the center; the
  // remaining constraints ask every center point to be approached at every j.
  std::vector<Point> keep;
  std::vector<std::vector<bool>> hits;
  for (auto& x : candidates) {
    std::vector<bool> row((ell + 1) * cs.size(), false);
    bool ok = true;
    for (std::size_t j = 0; j <= ell && ok; ++j) {
      const Point y = sys.iterate(x, j * n);
      bool any = false;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        row[j * cs.size() + i] = space.distance(y, cs[i]) < eps;
        any = any || row[j * cs.size() + i];
      }
      ok = any;
    }
    if (!ok) continue;
    keep.push_back(std::move(x));
    hits.push_back(std::move(row));
  }
  const auto picked = cover(keep, hits, (ell + 1) * cs.size());
  if (!picked) return std::nullopt;
  CompactSet k(space, *picked);
  for (std::size_t j = 0; j <= ell; ++j) {
    if (!hausdorff_ball_contains(center, eps, hyper_iterate(sys, k, j * n))) {
      throw InvariantViolation("hyperspace witness " + k.to_string() + " leaves the ball at j = " +
                               std::to_string(j));
    }
  }
  return k;
}

std::optional<StepFuzzySet> fuzzy_rec_witness(const DynSystem& sys, const StepFuzzySet& u,
                                              double eps, std::uint64_t n, std::size_t ell,
                                              const SamplingOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const auto anchors = stratify(u, eps / 2.0);
  std::vector<double> levels(anchors.begin() + 1, anchors.end());
  std::vector<CompactSet> compacts;
  for (double a : levels) {
    auto k = hyper_rec_witness(sys, level_set(u, a), eps / 2.0, n, ell, options);
    if (!k) return std::nullopt;
    compacts.push_back(std::move(*k));
  }
  StepFuzzySet v = witness_fuzzy(levels, compacts);
  for (std::size_t j = 0; j <= ell; ++j) {
    const double d = d_inf(u, zadeh_iterate(sys, v, j * n));
    if (!(d < eps)) {
      throw InvariantViolation("fuzzy witness misses by " + std::to_string(d) + " at j = " +
                               std::to_string(j));
    }
  }
  return v;
}

CompactSet fuzzy_to_hyper_witness(const StepFuzzySet& v) { return v.sets().back(); }

// ---------------------------------------------------------------------------
// Point recurrence and quasi-rigidity

PointRecurrence point_recurrence(const DynSystem& sys, std::span<const Coord> x, double eps,
                                 std::uint64_t horizon) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const MetricSpace& space = sys.space();
  space.validate(x);
  const Point x0 = space.normalize(Point(x.begin(), x.end()));
  auto member = [&](std::uint64_t n) { return space.distance(sys.iterate(x0, n), x0) < eps; };
  std::optional<ReturnWindow> window;
  if (space.is_finite()) {
    window = finite_window(FiniteView(sys), horizon, member);
  } else {
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 0; n <= horizon; ++n) {
      if (member(n)) members.push_back(n);
    }
    window.emplace(horizon, std::move(members), Semantics::kWindowed);
  }
  PointRecurrence out{std::move(*window), {}, 0};
  for (std::size_t len = 2; len <= kMaxApLength; ++len) {
    const bool found = family_eval(out.window, FamilySpec::ContainsAP(len)).holds;
    out.ap.push_back(found);
    if (found) out.max_ap = len;
  }
  return out;
}

std::vector<double> default_eps_schedule() {
  std::vector<double> out;
  for (int k = 0; k <= 12; ++k) out.push_back(0.1 * std::ldexp(1.0, -k));
  return out;
}

QuasiRigidity quasi_rigidity_search(const DynSystem& sys, std::span<const Point> sample,
                                    std::span<const double> schedule, std::uint64_t horizon) {
  if (sample.empty()) throw std::invalid_argument("quasi-rigidity search needs sample points");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) || (i > 0 && !(schedule[i] < schedule[i - 1]))) {
      throw std::invalid_argument("eps schedule must be positive and strictly decreasing");
    }
  }
  const MetricSpace& space = sys.space();
  std::vector<Point> pts;
  for (const auto& p : sample) {
    space.validate(p);
    pts.push_back(space.normalize(p));
  }
  QuasiRigidity out;
  std::uint64_t n = 0;
  for (double eps : schedule) {
    bool found = false;
    while (!found && n < horizon) {
      ++n;
      double worst = 0.0;
      for (const auto& p : pts) {
        worst = std::max(worst, space.distance(sys.iterate(p, n), p));
        if (!(worst < eps)) break;
      }
      if (worst < eps) {
        out.times.push_back(n);
        out.residuals.push_back(worst);
        found = true;
      }
    }
    if (!found) break;
    ++out.served;
  }
  return out;
}

}  // namespace hyperrec

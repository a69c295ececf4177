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

#include "hyperrec/expcli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "hyperrec/errors.hpp"
#include "hyperrec/expcli/report.hpp"
#include "hyperrec/oracle.hpp"
#include "hyperrec/random.hpp"
#include "hyperrec/recurrence.hpp"

namespace hyperrec::expcli {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"rotation", "theta: number | \"p/q\" | golden", "x -> x + theta on the circle"},
      {"doubling", "", "x -> 2x on the circle"},
      {"finite", "map: [f(0), ...], distances: optional matrix",
       "self-map of a finite metric space (discrete when no matrix)"},
      {"product", "of: system, n: N | factors: [system, ...]",
       "N-fold or mixed direct product, max metric"},
      {"wandering", "", "finite map [1, 1]: point 0 leaves and never returns"},
      {"translation", "length: L", "n -> n + 1 on the path 0..L-1, last point fixed"},
  };
  return entries;
}

namespace {

std::string scalar_text(const YAML::Node& n) { return n.IsScalar() ? n.Scalar() : std::string(); }

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Json yaml_to_json(const YAML::Node& n) {
  switch (n.Type()) {
    case YAML::NodeType::Sequence: {
      Json out = Json::array();
      for (const auto& item : n) out.push_back(yaml_to_json(item));
      return out;
    }
    case YAML::NodeType::Map: {
      Json out = Json::object();
      for (const auto& kv : n) out[kv.first.Scalar()] = yaml_to_json(kv.second);
      return out;
    }
    case YAML::NodeType::Scalar: {
      const std::string& s = n.Scalar();
      if (n.Tag() == "!") return s;
      if (s == "true") return true;
      if (s == "false") return false;
      if (is_integer_text(s)) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data() + (s[0] == '+'), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size()) return v;
      }
      if (const auto d = parse_double(s)) return *d;
      return s;
    }
    default:
      return nullptr;
  }
}

// Converts YAML nodes to domain values; every failure names the node's line.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& at, const std::string& msg) const {
    const YAML::Mark m = at.Mark();
    std::string where = source_;
    if (m.line >= 0) {
      where += ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1);
    }
    throw ConfigError(where + ": " + msg);
  }

  YAML::Node require(const YAML::Node& map, const std::string& key) const {
    const YAML::Node v = map[key];
    if (!v.IsDefined() || v.IsNull()) fail(map, "missing required key '" + key + "'");
    return v;
  }

  void allow_keys(const YAML::Node& map, std::initializer_list<std::string_view> keys) const {
    if (!map.IsMap()) fail(map, "expected a mapping");
    for (const auto& kv : map) {
      const std::string k = kv.first.Scalar();
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        fail(kv.first, "unknown key '" + k + "'");
      }
    }
  }

  double real(const YAML::Node& n, const std::string& what) const {
    const auto v = n.IsScalar() ? parse_double(n.Scalar()) : std::nullopt;
    if (!v || !std::isfinite(*v)) fail(n, what + " must be a finite number");
    return *v;
  }

  double positive(const YAML::Node& n, const std::string& what) const {
    const double v = real(n, what);
    if (!(v > 0.0)) fail(n, what + " must be positive");
    return v;
  }

  std::uint64_t count(const YAML::Node& n, const std::string& what, std::uint64_t lo,
                      std::uint64_t hi) const {
    const std::string s = scalar_text(n);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      fail(n, what + " must be a non-negative integer");
    }
    if (v < lo) fail(n, what + " must be at least " + std::to_string(lo));
    if (v > hi) fail(n, what + " " + std::to_string(v) + " exceeds the budget " + std::to_string(hi));
    return v;
  }

  std::uint64_t count_or(const YAML::Node& map, const std::string& key, std::uint64_t fallback,
                         std::uint64_t lo, std::uint64_t hi) const {
    const YAML::Node v = map[key];
    return v.IsDefined() ? count(v, key, lo, hi) : fallback;
  }

  std::string text(const YAML::Node& n, const std::string& what) const {
    if (!n.IsScalar()) fail(n, what + " must be a string");
    return n.Scalar();
  }

  const YAML::Node& seq(const YAML::Node& n, const std::string& what) const {
    if (!n.IsSequence()) fail(n, what + " must be a list");
    return n;
  }

  Coord coord(const YAML::Node& n) const {
    const std::string s = scalar_text(n);
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::int64_t p = 0, q = 0;
      const auto a = std::from_chars(s.data(), s.data() + slash, p);
      const auto b = std::from_chars(s.data() + slash + 1, s.data() + s.size(), q);
      if (a.ec != std::errc() || a.ptr != s.data() + slash || b.ec != std::errc() ||
          b.ptr != s.data() + s.size() || q <= 0) {
        fail(n, "malformed fraction '" + s + "'");
      }
      return Coord::Rational(p, q);
    }
    return Coord(real(n, "coordinate"));
  }

  Point point(const YAML::Node& n, const MetricSpace& space) const {
    Point p;
    if (n.IsSequence()) {
      for (const auto& c : n) p.push_back(coord(c));
    } else {
      p.push_back(coord(n));
    }
    try {
      space.validate(p);
    } catch (const std::exception& e) {
      fail(n, std::string("point does not fit ") + space.describe() + ": " + e.what());
    }
    return space.normalize(std::move(p));
  }

  std::vector<Point> points(const YAML::Node& n, const MetricSpace& space) const {
    std::vector<Point> out;
    for (const auto& p : seq(n, "point list")) out.push_back(point(p, space));
    if (out.empty()) fail(n, "point list must be non-empty");
    return out;
  }

  CompactSet compact(const YAML::Node& n, const MetricSpace& space) const {
    return CompactSet(space, points(n, space));
  }

  Arc arc(const YAML::Node& n) const {
    if (!n.IsSequence() || n.size() != 2) fail(n, "an arc is a pair [from, to]");
    return Arc{coord(n[0]), coord(n[1])};
  }

  Ball ball(const YAML::Node& n, const MetricSpace& space) const {
    allow_keys(n, {"center", "radius"});
    return Ball{point(require(n, "center"), space), positive(require(n, "radius"), "radius")};
  }

  OpenSet open_unchecked(const YAML::Node& n, const MetricSpace& space) const {
    if (!n.IsMap() || n.size() != 1) {
      fail(n, "an open set is one of {subset: ...}, {arc: ...}, {arcs: ...}, {ball: ...}, "
              "{balls: ...}, {box: ...}");
    }
    const std::string kind = n.begin()->first.Scalar();
    const YAML::Node body = n.begin()->second;
    if (kind == "subset") {
      std::vector<std::size_t> idx;
      for (const auto& i : seq(body, "subset")) idx.push_back(count(i, "index", 0, 1u << 30));
      return OpenSet::Subset(std::move(idx));
    }
    if (kind == "arc") return OpenSet::Arcs({arc(body)});
    if (kind == "arcs") {
      std::vector<Arc> arcs;
      for (const auto& a : seq(body, "arcs")) arcs.push_back(arc(a));
      return OpenSet::Arcs(std::move(arcs));
    }
    if (kind == "ball") return OpenSet::Balls({ball(body, space)});
    if (kind == "balls") {
      std::vector<Ball> balls;
      for (const auto& b : seq(body, "balls")) balls.push_back(ball(b, space));
      return OpenSet::Balls(std::move(balls));
    }
    if (kind == "box") {
      const auto factors = space.kind() == MetricSpace::Kind::kProduct
                               ? space.factors()
                               : std::span<const MetricSpace>();
      if (!body.IsSequence() || body.size() != factors.size()) {
        fail(body, "box needs one open set per factor of " + space.describe());
      }
      std::vector<OpenSet> parts;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        parts.push_back(open_unchecked(body[i], factors[i]));
      }
      return OpenSet::Box(std::move(parts));
    }
    fail(n.begin()->first, "unknown open-set kind '" + kind + "'");
  }

  OpenSet open(const YAML::Node& n, const MetricSpace& space) const {
    OpenSet u = open_unchecked(n, space);
    try {
      validate_open(space, u);
    } catch (const std::exception& e) {
      fail(n, e.what());
    }
    return u;
  }

  FamilySpec family(const YAML::Node& n) const {
    try {
      return FamilySpec::Parse(text(n, "family"));
    } catch (const std::invalid_argument& e) {
      fail(n, e.what());
    }
  }

  DynSystem system(const YAML::Node& n) const {
    if (n.IsScalar()) {
      const std::string name = n.Scalar();
      if (name == "doubling") return DynSystem::Doubling();
      if (name == "wandering") return DynSystem::FiniteMap({1, 1});
      if (std::none_of(catalog().begin(), catalog().end(),
                       [&](const CatalogEntry& e) { return e.name == name; })) {
        fail(n, "unknown catalog entry '" + name + "'");
      }
      fail(n, "catalog entry '" + name + "' needs parameters; use a mapping with 'name'");
    }
    if (!n.IsMap()) fail(n, "system must be a catalog name or a mapping");
    const std::string name = text(require(n, "name"), "system name");
    if (name == "rotation") {
      allow_keys(n, {"name", "theta"});
      const YAML::Node t = require(n, "theta");
      if (scalar_text(t) == "golden") return DynSystem::Rotation((std::sqrt(5.0) - 1.0) / 2.0);
      return DynSystem::Rotation(coord(t).value());
    }
    if (name == "doubling" || name == "wandering") {
      allow_keys(n, {"name"});
      return name == "doubling" ? DynSystem::Doubling() : DynSystem::FiniteMap({1, 1});
    }
    if (name == "finite") {
      allow_keys(n, {"name", "map", "distances"});
      const YAML::Node m = require(n, "map");
      std::vector<std::size_t> table;
      for (const auto& v : seq(m, "map")) table.push_back(count(v, "map entry", 0, 1u << 30));
      if (table.empty()) fail(m, "map must be non-empty");
      try {
        if (!n["distances"].IsDefined()) return DynSystem::FiniteMap(std::move(table));
        std::vector<std::vector<double>> rows;
        for (const auto& row : seq(n["distances"], "distances")) {
          std::vector<double> r;
          for (const auto& d : seq(row, "distance row")) r.push_back(real(d, "distance"));
          rows.push_back(std::move(r));
        }
        return DynSystem::FiniteMap(MetricSpace::Finite(std::move(rows)), std::move(table));
      } catch (const std::invalid_argument& e) {
        fail(n, e.what());
      }
    }
    if (name == "translation") {
      allow_keys(n, {"name", "length"});
      const auto len = static_cast<std::size_t>(count(require(n, "length"), "length", 2, 4096));
      std::vector<std::vector<double>> d(len, std::vector<double>(len));
      std::vector<std::size_t> table(len);
      for (std::size_t i = 0; i < len; ++i) {
        table[i] = std::min(i + 1, len - 1);
        for (std::size_t j = 0; j < len; ++j) {
          d[i][j] = std::fabs(static_cast<double>(i) - static_cast<double>(j));
        }
      }
      return DynSystem::FiniteMap(MetricSpace::Finite(std::move(d)), std::move(table));
    }
    if (name == "product") {
      allow_keys(n, {"name", "of", "n", "factors"});
      if (n["factors"].IsDefined()) {
        if (n["of"].IsDefined() || n["n"].IsDefined()) fail(n, "use either factors or of/n");
        std::vector<DynSystem> parts;
        for (const auto& f : seq(n["factors"], "factors")) parts.push_back(system(f));
        if (parts.empty()) fail(n["factors"], "factors must be non-empty");
        return DynSystem::Product(std::move(parts));
      }
      const auto arity = static_cast<std::size_t>(count(require(n, "n"), "n", 1, 64));
      return n_fold(system(require(n, "of")), arity);
    }
    fail(n["name"], "unknown catalog entry '" + name + "'");
  }

 private:
  std::string source_;
};

std::string semantics_name(Semantics s) { return std::string(to_string(s)); }

int semantics_rank(const std::string& s) {
  if (s == "exact") return 0;
  if (s == "probed") return 1;
  if (s == "windowed") return 2;
  return 3;
}

std::string weakest(const std::vector<StatementVerdict>& vs) {
  std::string out = "exact";
  for (const auto& v : vs) {
    if (semantics_rank(v.semantics) > semantics_rank(out)) out = v.semantics;
  }
  return out;
}

// Binds one analysis entry to a runnable closure.
class Binder {
 public:
  Binder(const Reader& rd, DynSystem sys, std::uint64_t seed)
      : rd_(rd), sys_(std::move(sys)), seed_(seed) {}

  std::function<AnalysisResult()> bind(const YAML::Node& n, const std::string& op,
                                       std::size_t index) const {
    SamplingOptions opts;
    opts.seed = derive_seed(seed_, index);
    opts.budget = static_cast<std::size_t>(
        rd_.count_or(n, "budget", opts.budget, 1, kMaxSamplingBudget));
    const auto& space = sys_.space();
    const DynSystem sys = sys_;

    if (op == "return_set" || op == "ell_return_set") {
      const bool pair = op == "return_set";
      if (pair) {
        rd_.allow_keys(n, {"op", "name", "u", "v", "horizon", "family", "budget"});
      } else {
        rd_.allow_keys(n, {"op", "name", "u", "ell", "horizon", "family", "budget"});
      }
      const OpenSet u = rd_.open(rd_.require(n, "u"), space);
      const OpenSet v = pair ? rd_.open(rd_.require(n, "v"), space) : u;
      const std::size_t ell = pair ? 1 : static_cast<std::size_t>(rd_.count_or(n, "ell", 1, 1, 64));
      const std::uint64_t h = horizon(n);
      const auto spec = optional_family(n);
      return [=] {
        const ReturnWindow w = pair ? return_set(sys, u, v, h, opts)
                                    : ell_return_set(sys, u, ell, h, opts);
        AnalysisResult r;
        r.semantics = semantics_name(w.semantics());
        r.result = {{"window", window_json(w)}};
        r.headline = std::to_string(w.members().size()) + " returns in 1.." + std::to_string(h);
        if (spec) {
          const auto fv = family_eval(w, *spec);
          r.holds = fv.holds;
          r.semantics = semantics_name(fv.semantics);
          r.result["verdict"] = verdict_json(*spec, fv);
          r.headline += "; " + spec->describe() + " " + (fv.holds ? "holds" : "fails");
        }
        return r;
      };
    }

    if (op == "is_rec_system") {
      rd_.allow_keys(n, {"op", "name", "probes", "ell", "family", "horizon", "budget"});
      const std::vector<OpenSet> probes = probe_family(n);
      const std::size_t ell = static_cast<std::size_t>(rd_.count_or(n, "ell", 1, 1, 64));
      const std::uint64_t h = horizon(n);
      auto spec = optional_family(n);
      if (!spec) {
        if (!space.is_finite()) rd_.fail(n, "family is required for a continuous system");
        spec = FamilySpec::InfiniteExact();
      }
      const FamilySpec fam = *spec;
      return [=] {
        const SystemVerdict sv = is_rec_system(sys, probes, ell, fam, h, opts);
        AnalysisResult r;
        r.holds = sv.holds;
        r.semantics = semantics_name(sv.semantics);
        Json list = Json::array();
        for (const auto& p : sv.probes) {
          list.push_back({{"probe", p.probe},
                          {"window", window_json(p.window)},
                          {"verdict", verdict_json(fam, p.verdict)}});
        }
        r.result = {{"family", fam.describe()}, {"ell", ell},     {"holds", sv.holds},
                    {"semantics", r.semantics}, {"scope", sv.scope()}, {"probes", list}};
        r.headline = fam.describe() + (sv.holds ? " holds " : " fails ") + sv.scope();
        return r;
      };
    }

    if (op == "point_recurrence") {
      rd_.allow_keys(n, {"op", "name", "point", "eps", "horizon"});
      const Point x = rd_.point(rd_.require(n, "point"), space);
      const double eps = rd_.positive(rd_.require(n, "eps"), "eps");
      const std::uint64_t h = horizon(n);
      return [=] {
        const PointRecurrence pr = point_recurrence(sys, x, eps, h);
        AnalysisResult r;
        r.semantics = semantics_name(pr.window.semantics());
        r.holds = !pr.window.members().empty();
        Json ap = Json::array();
        for (std::size_t i = 0; i < pr.ap.size(); ++i) {
          ap.push_back({{"terms", i + 2}, {"found", static_cast<bool>(pr.ap[i])}});
        }
        Json prog = nullptr;
        if (pr.max_ap > 0) {
          if (const auto p = find_progression(pr.window, pr.max_ap)) {
            prog = {{"start", p->first}, {"step", p->second}, {"terms", pr.max_ap}};
          }
        }
        r.result = {{"point", to_string(std::span<const Coord>(x))},
                    {"eps", eps},
                    {"window", window_json(pr.window)},
                    {"ap", ap},
                    {"max_ap", pr.max_ap},
                    {"progression", prog}};
        r.headline = std::to_string(pr.window.members().size()) + " returns, longest AP " +
                     std::to_string(pr.max_ap);
        return r;
      };
    }

    if (op == "quasi_rigidity") {
      rd_.allow_keys(n, {"op", "name", "sample", "schedule", "horizon"});
      const std::vector<Point> sample = sample_points(rd_.require(n, "sample"));
      std::vector<double> schedule = default_eps_schedule();
      if (n["schedule"].IsDefined()) {
        schedule.clear();
        for (const auto& e : rd_.seq(n["schedule"], "schedule")) {
          schedule.push_back(rd_.positive(e, "schedule entry"));
        }
        if (schedule.empty()) rd_.fail(n["schedule"], "schedule must be non-empty");
      }
      const std::uint64_t h = horizon(n);
      return [=] {
        const QuasiRigidity q = quasi_rigidity_search(sys, sample, schedule, h);
        AnalysisResult r;
        r.semantics = "windowed";
        r.holds = q.served == schedule.size();
        r.result = {{"sample_size", sample.size()},
                    {"schedule", schedule},
                    {"times", q.times},
                    {"residuals", q.residuals},
                    {"served", q.served}};
        std::string seq;
        for (auto t : q.times) seq += (seq.empty() ? "" : ",") + std::to_string(t);
        r.headline = "times " + seq;
        return r;
      };
    }

    if (op == "hyper_witness") {
      rd_.allow_keys(n, {"op", "name", "center", "eps", "opens", "n", "ell", "budget"});
      const std::uint64_t t = rd_.count(rd_.require(n, "n"), "n", 1, kMaxHorizon);
      const std::size_t ell = static_cast<std::size_t>(rd_.count_or(n, "ell", 1, 1, 64));
      std::optional<VietorisOpen> vo;
      std::optional<CompactSet> center;
      double eps = 0.0;
      if (n["opens"].IsDefined()) {
        if (n["center"].IsDefined()) rd_.fail(n, "use either opens or center/eps");
        std::vector<OpenSet> opens;
        for (const auto& o : rd_.seq(n["opens"], "opens")) opens.push_back(rd_.open(o, space));
        if (opens.empty()) rd_.fail(n["opens"], "opens must be non-empty");
        vo.emplace(std::move(opens));
      } else {
        center = rd_.compact(rd_.require(n, "center"), space);
        eps = rd_.positive(rd_.require(n, "eps"), "eps");
      }
      return [=] {
        const auto w = vo ? hyper_rec_witness(sys, *vo, t, ell, opts)
                          : hyper_rec_witness(sys, *center, eps, t, ell, opts);
        AnalysisResult r;
        r.semantics = "witnessed";
        r.holds = w.has_value();
        r.result = {{"target", vo ? vo->describe()
                                  : "ball(" + center->to_string() + ", " + Json(eps).dump() + ")"},
                    {"n", t},
                    {"ell", ell},
                    {"found", w.has_value()},
                    {"witness", w ? Json(w->to_string()) : Json(nullptr)}};
        r.headline = w ? "witness " + w->to_string() : "no witness found";
        return r;
      };
    }

    if (op == "fuzzy_witness") {
      rd_.allow_keys(n, {"op", "name", "fuzzy", "eps", "n", "ell", "budget"});
      const StepFuzzySet u = fuzzy(rd_.require(n, "fuzzy"));
      const double eps = rd_.positive(rd_.require(n, "eps"), "eps");
      const std::uint64_t t = rd_.count(rd_.require(n, "n"), "n", 1, kMaxHorizon);
      const std::size_t ell = static_cast<std::size_t>(rd_.count_or(n, "ell", 1, 1, 64));
      return [=] {
        const auto w = fuzzy_rec_witness(sys, u, eps, t, ell, opts);
        AnalysisResult r;
        r.semantics = "witnessed";
        r.holds = w.has_value();
        r.result = {{"center", u.to_string()},
                    {"eps", eps},
                    {"n", t},
                    {"ell", ell},
                    {"found", w.has_value()},
                    {"witness", w ? Json(w->to_string()) : Json(nullptr)},
                    {"compact_witness",
                     w ? Json(fuzzy_to_hyper_witness(*w).to_string()) : Json(nullptr)}};
        r.headline = w ? "witness " + w->to_string() : "no witness found";
        return r;
      };
    }

    if (op == "oracle_compact" || op == "oracle_fuzzy") {
      const bool fz = op == "oracle_fuzzy";
      if (fz) {
        rd_.allow_keys(n, {"op", "name", "ell", "family", "m", "sweep"});
      } else {
        rd_.allow_keys(n, {"op", "name", "ell", "family", "n_max", "sweep"});
      }
      const std::size_t ell = static_cast<std::size_t>(rd_.count_or(n, "ell", 1, 1, 3));
      const FamilySpec fam = optional_family(n).value_or(FamilySpec::InfiniteExact());
      if (!fam.exact()) rd_.fail(n["family"], "oracle checks need an exact family");
      const std::size_t level = static_cast<std::size_t>(
          fz ? rd_.count_or(n, "m", 2, 1, 3) : rd_.count_or(n, "n_max", 3, 1, 3));
      const std::vector<DynSystem> systems = oracle_systems(n, fz ? 3 : 5, index);
      return [=] {
        AnalysisResult r;
        Json reports = Json::array();
        std::vector<StatementVerdict> all;
        std::size_t agree = 0;
        for (const auto& s : systems) {
          const EquivalenceReport rep = fz ? check_fuzzy_equivalence(s, ell, fam, level)
                                           : check_compact_equivalence(s, ell, fam, level);
          reports.push_back(equivalence_json(rep));
          all.insert(all.end(), rep.verdicts.begin(), rep.verdicts.end());
          agree += rep.agreement ? 1 : 0;
        }
        r.consistent = agree == systems.size();
        r.holds = r.consistent;
        r.semantics = weakest(all);
        r.result = {{"family", fam.describe()},
                    {"ell", ell},
                    {fz ? "m" : "n_max", level},
                    {"systems", systems.size()},
                    {"agreement", r.consistent},
                    {"reports", reports}};
        r.headline = std::to_string(agree) + "/" + std::to_string(systems.size()) +
                     " systems agree";
        return r;
      };
    }

    if (op == "oracle_descent") {
      rd_.allow_keys(n, {"op", "name", "mode", "horizon", "eps", "sample_points", "grid_levels",
                         "ap_target", "budget"});
      const YAML::Node mn = rd_.require(n, "mode");
      const std::string ms = rd_.text(mn, "mode");
      DescentMode mode = DescentMode::kPoint;
      if (ms == "point") {
        mode = DescentMode::kPoint;
      } else if (ms == "ap") {
        mode = DescentMode::kAP;
      } else if (ms == "quasi_rigid") {
        mode = DescentMode::kQuasiRigid;
      } else {
        rd_.fail(mn, "mode must be point, ap or quasi_rigid");
      }
      DescentBudgets b;
      b.horizon = rd_.count_or(n, "horizon", b.horizon, 1, kMaxHorizon);
      if (n["eps"].IsDefined()) b.eps = rd_.positive(n["eps"], "eps");
      b.sample_points = static_cast<std::size_t>(
          rd_.count_or(n, "sample_points", b.sample_points, 1, 10000));
      b.grid_levels = static_cast<std::size_t>(rd_.count_or(n, "grid_levels", b.grid_levels, 1, 8));
      b.ap_target = static_cast<std::size_t>(rd_.count_or(n, "ap_target", b.ap_target, 2, kMaxApLength));
      b.sampling = opts;
      return [=] {
        const EquivalenceReport rep = check_point_rec_descent(sys, mode, b);
        AnalysisResult r;
        r.consistent = rep.agreement;
        r.holds = rep.agreement;
        r.semantics = weakest(rep.verdicts);
        r.result = equivalence_json(rep);
        r.headline = rep.check + (rep.agreement ? " levels agree" : " levels disagree");
        return r;
      };
    }

    rd_.fail(n["op"], "unknown operation '" + op + "'");
  }

 private:
  std::uint64_t horizon(const YAML::Node& n) const {
    return rd_.count(rd_.require(n, "horizon"), "horizon", 1, kMaxHorizon);
  }

  std::optional<FamilySpec> optional_family(const YAML::Node& n) const {
    if (!n["family"].IsDefined()) return std::nullopt;
    const FamilySpec f = rd_.family(n["family"]);
    if (f.exact() && !sys_.space().is_finite()) {
      rd_.fail(n["family"], f.describe() + " needs a finite system; use a window family");
    }
    return f;
  }

  std::vector<OpenSet> probe_family(const YAML::Node& n) const {
    const YAML::Node p = n["probes"];
    const auto& space = sys_.space();
    if (!p.IsDefined() || scalar_text(p) == "singletons") {
      if (!space.is_finite()) rd_.fail(n, "singleton probes need a finite system");
      return singleton_probes(space);
    }
    if (scalar_text(p) == "balls") {
      try {
        return exhaustive_ball_probes(space);
      } catch (const std::invalid_argument& e) {
        rd_.fail(p, e.what());
      }
    }
    std::vector<OpenSet> out;
    for (const auto& o : rd_.seq(p, "probes")) out.push_back(rd_.open(o, space));
    if (out.empty()) rd_.fail(p, "probes must be non-empty");
    return out;
  }

  std::vector<Point> sample_points(const YAML::Node& n) const {
    const auto& space = sys_.space();
    if (n.IsMap()) {
      rd_.allow_keys(n, {"grid"});
      const auto k = rd_.count(rd_.require(n, "grid"), "grid", 1, 100000);
      if (space.kind() != MetricSpace::Kind::kCircle) {
        rd_.fail(n, "grid samples need the circle");
      }
      std::vector<Point> out;
      for (std::uint64_t i = 0; i < k; ++i) {
        out.push_back(Point{Coord::Rational(static_cast<std::int64_t>(i),
                                            static_cast<std::int64_t>(k))});
      }
      return out;
    }
    return rd_.points(n, space);
  }

  StepFuzzySet fuzzy(const YAML::Node& n) const {
    rd_.allow_keys(n, {"levels", "sets"});
    std::vector<double> levels;
    for (const auto& a : rd_.seq(rd_.require(n, "levels"), "levels")) {
      levels.push_back(rd_.real(a, "level"));
    }
    std::vector<CompactSet> sets;
    for (const auto& s : rd_.seq(rd_.require(n, "sets"), "sets")) {
      sets.push_back(rd_.compact(s, sys_.space()));
    }
    try {
      return StepFuzzySet(std::move(levels), std::move(sets));
    } catch (const std::invalid_argument& e) {
      rd_.fail(n, e.what());
    }
  }

  std::vector<DynSystem> oracle_systems(const YAML::Node& n, std::size_t max_points,
                                        std::size_t index) const {
    const YAML::Node sw = n["sweep"];
    if (!sw.IsDefined()) {
      const auto& space = sys_.space();
      if (sys_.kind() != DynSystem::Kind::kFiniteMap || space.size() > max_points) {
        rd_.fail(n, "oracle checks need a finite map on at most " + std::to_string(max_points) +
                        " points, or a sweep");
      }
      return {sys_};
    }
    rd_.allow_keys(sw, {"count", "max_points"});
    const auto count = rd_.count(rd_.require(sw, "count"), "count", 1, kMaxSweep);
    const auto cap = rd_.count_or(sw, "max_points", max_points, 1, max_points);
    std::vector<DynSystem> out;
    for (std::uint64_t i = 0; i < count; ++i) {
      Rng rng(derive_seed(derive_seed(seed_, index), i));
      const std::size_t pts = 1 + rng.below(cap);
      out.push_back(DynSystem::FiniteMap(random_finite_space(rng, pts), random_map(rng, pts)));
    }
    return out;
  }

  const Reader& rd_;
  DynSystem sys_;
  std::uint64_t seed_;
};

}  // namespace

ExperimentConfig parse_config(std::string_view text, const std::string& source,
                              std::optional<std::uint64_t> seed_override) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ":" +
                      std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  const Reader rd(source);
  if (!root.IsMap()) rd.fail(root, "config must be a mapping");
  rd.allow_keys(root, {"seed", "system", "analyses", "output"});

  ExperimentConfig cfg;
  cfg.seed = root["seed"].IsDefined() ? rd.count(root["seed"], "seed", 0, UINT64_MAX) : 0;
  if (seed_override) cfg.seed = *seed_override;

  const DynSystem sys = rd.system(rd.require(root, "system"));
  cfg.system = sys.describe();

  const YAML::Node list = rd.seq(rd.require(root, "analyses"), "analyses");
  if (list.size() == 0) rd.fail(list, "analyses must be non-empty");
  const Binder binder(rd, sys, cfg.seed);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const YAML::Node a = list[i];
    if (!a.IsMap()) rd.fail(a, "each analysis must be a mapping");
    Analysis an;
    an.op = rd.text(rd.require(a, "op"), "op");
    an.name = a["name"].IsDefined() ? rd.text(a["name"], "name")
                                    : an.op + "_" + std::to_string(i);
    an.run = binder.bind(a, an.op, i);
    cfg.analyses.push_back(std::move(an));
  }

  if (const YAML::Node out = root["output"]; out.IsDefined()) {
    rd.allow_keys(out, {"report", "csv", "plot"});
    if (out["report"].IsDefined()) cfg.output.report = rd.text(out["report"], "report");
    if (out["csv"].IsDefined()) cfg.output.csv = rd.text(out["csv"], "csv");
    if (out["plot"].IsDefined()) cfg.output.plot = rd.text(out["plot"], "plot");
  }

  cfg.echo = yaml_to_json(root);
  cfg.echo["seed"] = cfg.seed;
  return cfg;
}

ExperimentConfig load_config(const std::string& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot read config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path, seed_override);
}

}  // namespace hyperrec::expcli

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

#include "hyperrec/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperrec {

namespace {

// Minimum gap kept between relabeled levels and the fixed levels they must
// avoid.
constexpr double kSeparation = 1e-9;

void validate_levels(std::span<const double> levels) {
  if (levels.empty()) throw std::invalid_argument("fuzzy set needs at least one level");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0.0 && levels[i] <= 1.0)) {
      throw std::invalid_argument("fuzzy levels must lie in (0, 1]");
    }
    if (i > 0 && !(levels[i] > levels[i - 1])) {
      throw std::invalid_argument("fuzzy levels must be strictly increasing");
    }
  }
  if (levels.back() != 1.0) throw std::invalid_argument("top fuzzy level must be exactly 1");
}

std::string level_text(double a) { return to_string(Coord(a)); }

}  // namespace

// ---------------------------------------------------------------------------
// StepFuzzySet

StepFuzzySet::StepFuzzySet(std::vector<double> levels, std::vector<CompactSet> sets)
    : levels_(std::move(levels)), sets_(std::move(sets)) {
  if (!levels_.empty() && std::fabs(levels_.back() - 1.0) <= kTolerance) levels_.back() = 1.0;
  validate_levels(levels_);
  if (sets_.size() != levels_.size()) {
    throw std::invalid_argument("fuzzy set needs one level set per level");
  }
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (!(sets_[i].space() == sets_[0].space())) {
      throw std::invalid_argument("fuzzy level sets live in different spaces");
    }
    if (!sets_[i].subset_of(sets_[i - 1])) {
      throw std::invalid_argument("fuzzy level sets are not nested");
    }
  }
}

StepFuzzySet StepFuzzySet::Characteristic(CompactSet k) {
  return StepFuzzySet({1.0}, {std::move(k)});
}

std::size_t StepFuzzySet::bracket(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (alpha <= levels_[i] + kTolerance) return i;
  }
  return levels_.size() - 1;
}

double StepFuzzySet::membership(std::span<const Coord> x) const {
  for (std::size_t i = levels_.size(); i-- > 0;) {
    if (sets_[i].contains(x)) return levels_[i];
  }
  return 0.0;
}

StepFuzzySet StepFuzzySet::canonical() const {
  std::vector<double> levels;
  std::vector<CompactSet> sets;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i + 1 < levels_.size() && sets_[i] == sets_[i + 1]) continue;
    levels.push_back(levels_[i]);
    sets.push_back(sets_[i]);
  }
  return StepFuzzySet(std::move(levels), std::move(sets));
}

std::string StepFuzzySet::to_string() const {
  std::string out = "[";
  for (std::size_t i = levels_.size(); i-- > 0;) {
    out += level_text(levels_[i]) + ": " + sets_[i].to_string();
    if (i > 0) out += "; ";
  }
  return out + "]";
}

bool operator==(const StepFuzzySet& a, const StepFuzzySet& b) {
  const StepFuzzySet x = a.canonical();
  const StepFuzzySet y = b.canonical();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::fabs(x.levels()[i] - y.levels()[i]) > kTolerance) return false;
    if (!(x.sets()[i] == y.sets()[i])) return false;
  }
  return true;
}

const CompactSet& level_set(const StepFuzzySet& u, double alpha) {
  return u.sets()[u.bracket(alpha)];
}

StepFuzzySet zadeh_iterate(const DynSystem& sys, const StepFuzzySet& u, std::uint64_t n) {
  std::vector<CompactSet> sets;
  sets.reserve(u.size());
  for (const auto& s : u.sets()) sets.push_back(hyper_iterate(sys, s, n));
  return StepFuzzySet(u.levels(), std::move(sets));
}

StepFuzzySet zadeh_apply(const DynSystem& sys, const StepFuzzySet& u) {
  return zadeh_iterate(sys, u, 1);
}

double d_inf(const StepFuzzySet& u, const StepFuzzySet& v) {
  if (!(u.space() == v.space())) {
    throw std::invalid_argument("fuzzy sets live in different spaces");
  }
  // Both functions are constant on each merged bracket; alpha = 0 shares the
  // first bracket's level sets.
  double worst = 0.0;
  std::size_t i = 0;
  std::size_t k = 0;
  while (true) {
    worst = std::max(worst, hausdorff(u.sets()[i], v.sets()[k]));
    if (i + 1 == u.size() && k + 1 == v.size()) break;
    const double a = u.levels()[i];
    const double b = v.levels()[k];
    if (a < b - kTolerance) {
      ++i;
    } else if (b < a - kTolerance) {
      ++k;
    } else {
      ++i;
      ++k;
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Reparametrization

Reparametrization::Reparametrization(std::vector<std::pair<double, double>> breakpoints) {
  breakpoints_.emplace_back(0.0, 0.0);
  for (const auto& [b, g] : breakpoints) {
    if (b == 0.0 && g == 0.0) continue;
    if (b == 1.0 && g == 1.0) continue;
    if (!(b > 0.0 && b < 1.0 && g > 0.0 && g < 1.0)) {
      throw std::invalid_argument("reparametrization breakpoints must lie in (0, 1)");
    }
    breakpoints_.emplace_back(b, g);
  }
  breakpoints_.emplace_back(1.0, 1.0);
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i].first > breakpoints_[i - 1].first &&
          breakpoints_[i].second > breakpoints_[i - 1].second)) {
      throw std::invalid_argument("reparametrization must be strictly increasing");
    }
  }
}

double Reparametrization::operator()(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    const auto [b1, g1] = breakpoints_[i];
    if (alpha <= b1) {
      const auto [b0, g0] = breakpoints_[i - 1];
      if (alpha == b1) return g1;
      return g0 + (g1 - g0) * (alpha - b0) / (b1 - b0);
    }
  }
  return 1.0;
}

double Reparametrization::displacement() const {
  double d = 0.0;
  for (const auto& [b, g] : breakpoints_) d = std::max(d, std::fabs(g - b));
  return d;
}

StepFuzzySet reparametrize(const StepFuzzySet& v, const Reparametrization& xi) {
  std::vector<double> levels;
  levels.reserve(v.size());
  for (double b : v.levels()) levels.push_back(xi(b));
  return StepFuzzySet(std::move(levels), v.sets());
}

// ---------------------------------------------------------------------------
// Skorokhod metric

namespace {

// Staircase search state. Cell (i, k) means "inside u-bracket i and relabeled
// v-bracket k"; g is the lowest achievable position of the previous relabeled
// level gamma_{k-1}.
struct SkorokhodProblem {
  std::vector<double> alpha;  // u levels
  std::vector<double> beta;   // v levels
  std::vector<double> dist;   // row-major M x K bracket Hausdorff distances

  std::size_t rows() const { return alpha.size(); }
  std::size_t cols() const { return beta.size(); }
  double d(std::size_t i, std::size_t k) const { return dist[i * cols() + k]; }

  // True when some relabeling gamma has displacement <= eps and keeps every
  // visited bracket pair within eps. Fills the lowest such gamma.
  bool feasible(double eps, std::vector<double>* gamma) const {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const std::size_t m = rows();
    const std::size_t n = cols();
    std::vector<double> g(m * n, kInf);
    std::vector<std::size_t> parent(m * n, 0);
    if (d(0, 0) > eps) return false;
    g[0] = 0.0;
    auto relax = [&](std::size_t from, std::size_t i, std::size_t k, double value) {
      const std::size_t to = i * n + k;
      if (d(i, k) > eps) return;
      if (value < g[to]) {
        g[to] = value;
        parent[to] = from;
      }
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t c = i * n + k;
        if (g[c] == kInf) continue;
        const double lower = std::max(i == 0 ? 0.0 : alpha[i - 1], g[c]);
        // gamma_k stays above alpha_i: move to the next u-bracket.
        if (i + 1 < m && beta[k] + eps > alpha[i]) relax(c, i + 1, k, g[c]);
        if (k + 1 < n) {
          // gamma_k placed strictly inside (lower, alpha_i).
          const double lo = std::max(beta[k] - eps, lower + kSeparation);
          const double hi = std::min(beta[k] + eps, alpha[i] - kSeparation);
          if (lo <= hi) relax(c, i, k + 1, lo);
          // gamma_k = alpha_i: both brackets end together.
          if (i + 1 < m && std::fabs(alpha[i] - beta[k]) <= eps &&
              alpha[i] >= lower + kSeparation) {
            relax(c, i + 1, k + 1, alpha[i]);
          }
        }
      }
    }
    const std::size_t last = m * n - 1;
    if (g[last] == kInf) return false;
    if (gamma != nullptr) {
      gamma->assign(n, 1.0);
      std::size_t c = last;
      while (c != 0) {
        const std::size_t p = parent[c];
        if (p % n != c % n) (*gamma)[p % n] = g[c];
        c = p;
      }
    }
    return true;
  }
};

}  // namespace

SkorokhodMatch skorokhod_match(const StepFuzzySet& u, const StepFuzzySet& v) {
  if (!(u.space() == v.space())) {
    throw std::invalid_argument("fuzzy sets live in different spaces");
  }
  SkorokhodProblem p{u.levels(), v.levels(), {}};
  p.dist.resize(u.size() * v.size());
  std::vector<double> candidates{0.0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      p.dist[i * v.size() + k] = hausdorff(u.sets()[i], v.sets()[k]);
      candidates.push_back(p.dist[i * v.size() + k]);
      candidates.push_back(std::fabs(u.levels()[i] - v.levels()[k]));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Feasibility only changes at candidate values, so the infimum is the left
  // end of the first candidate interval whose interior is feasible.
  std::vector<double> gamma;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const double c = candidates[j];
    const double probe = j + 1 < candidates.size() ? 0.5 * (c + candidates[j + 1]) : c + 1.0;
    if (!p.feasible(probe, &gamma)) continue;
    p.feasible(c, &gamma);  // tighter witness when the infimum is attained
    std::vector<std::pair<double, double>> bp;
    for (std::size_t k = 0; k < v.size(); ++k) bp.emplace_back(v.levels()[k], gamma[k]);
    return {c, Reparametrization(std::move(bp))};
  }
  throw std::logic_error("skorokhod search found no feasible relabeling");
}

double d_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v) {
  return skorokhod_match(u, v).distance;
}

// ---------------------------------------------------------------------------
// Stratification and witness construction

std::vector<double> stratify(const StepFuzzySet& u, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("stratify needs eps > 0");
  const auto& levels = u.levels();
  const auto& sets = u.sets();
  std::vector<double> anchors{1.0};
  std::size_t anchor = levels.size() - 1;
  for (std::size_t j = levels.size() - 1; j-- > 0;) {
    if (hausdorff(sets[j], sets[anchor]) < eps) continue;
    anchor = j;
    anchors.push_back(levels[j]);
  }
  anchors.push_back(0.0);
  std::reverse(anchors.begin(), anchors.end());
  return anchors;
}

StepFuzzySet witness_fuzzy(std::span<const double> levels, std::span<const CompactSet> compacts) {
  if (levels.size() != compacts.size()) {
    throw std::invalid_argument("witness_fuzzy needs one compact set per level");
  }
  validate_levels(levels);
  std::vector<CompactSet> tails(compacts.begin(), compacts.end());
  for (std::size_t i = tails.size() - 1; i-- > 0;) tails[i] = set_union(tails[i], tails[i + 1]);
  return StepFuzzySet(std::vector<double>(levels.begin(), levels.end()), std::move(tails));
}

}  // namespace hyperrec

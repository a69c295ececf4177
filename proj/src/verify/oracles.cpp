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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "hyperrec/verify.hpp"

namespace hyperrec::verify {

std::vector<Convergent> convergents(long double theta, std::uint64_t max_q) {
  if (!(theta > 0.0L && theta < 1.0L)) throw std::invalid_argument("theta must lie in (0, 1)");
  std::vector<Convergent> out;
  // p_{-1}/q_{-1} = 1/0, p_0/q_0 = 0/1 with a_0 = 0.
  std::uint64_t p_prev = 1, q_prev = 0, p = 0, q = 1;
  long double x = theta;
  out.push_back({p, q, std::fabs(static_cast<long double>(q) * theta - p)});
  // Remainders this small mean theta is rational to working precision.
  constexpr long double kExhausted = 1e-15L;
  while (x > kExhausted) {
    const long double inv = 1.0L / x;
    const auto a = static_cast<std::uint64_t>(std::floor(inv));
    if (a > (max_q - q_prev) / q) break;
    x = inv - static_cast<long double>(a);
    const std::uint64_t p_next = a * p + p_prev;
    const std::uint64_t q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    const Convergent c{p, q, std::fabs(static_cast<long double>(q) * theta -
                                       static_cast<long double>(p))};
    // a_1 = 1 repeats q = 1 with a better numerator.
    if (q == out.back().q) {
      out.back() = c;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

long double circle_norm(long double theta, std::uint64_t n) {
  const long double t = static_cast<long double>(n) * theta;
  return std::fabs(t - std::nearbyint(t));
}

double brute_hausdorff(const MetricSpace& space, const std::vector<Point>& a,
                       const std::vector<Point>& b) {
  double worst = 0.0;
  for (const auto& x : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : b) best = std::min(best, space.distance(x, y));
    worst = std::max(worst, best);
  }
  for (const auto& y : b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& x : a) best = std::min(best, space.distance(x, y));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<double> brute_zadeh_values(const DynSystem& sys, const StepFuzzySet& u) {
  const auto& table = sys.table();
  std::vector<double> out(table.size(), 0.0);
  for (std::size_t x = 0; x < table.size(); ++x) {
    out[table[x]] = std::max(out[table[x]], u.membership(Point{Coord(static_cast<double>(x))}));
  }
  return out;
}

namespace {

// Level set {x : w(x) >= alpha} of a step function given as (levels, sets).
const std::vector<Point>& cut(const std::vector<double>& levels,
                              const std::vector<CompactSet>& sets, double alpha) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (alpha <= levels[i]) return sets[i].points();
  }
  return sets.back().points();
}

double sup_distance(const MetricSpace& space, const StepFuzzySet& u,
                    const std::vector<double>& v_levels, const std::vector<CompactSet>& v_sets) {
  // Both functions are constant between consecutive breakpoints; probe each
  // open stretch at its midpoint and every breakpoint itself.
  std::set<double> marks{0.0, 1.0};
  marks.insert(u.levels().begin(), u.levels().end());
  marks.insert(v_levels.begin(), v_levels.end());
  std::vector<double> probes(marks.begin(), marks.end());
  const std::size_t n = probes.size();
  for (std::size_t i = 0; i + 1 < n; ++i) probes.push_back(0.5 * (probes[i] + probes[i + 1]));
  double worst = 0.0;
  for (double a : probes) {
    worst = std::max(worst, brute_hausdorff(space, cut(u.levels(), u.sets(), a),
                                            cut(v_levels, v_sets, a)));
  }
  return worst;
}

}  // namespace

double brute_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v, std::size_t lattice) {
  const MetricSpace& space = u.space();
  std::set<double> grid;
  for (std::size_t k = 1; k < lattice; ++k) {
    grid.insert(static_cast<double>(k) / static_cast<double>(lattice));
  }
  for (double a : u.levels()) {
    if (a < 1.0) grid.insert(a);
  }
  for (double b : v.levels()) {
    if (b < 1.0) grid.insert(b);
  }
  const std::vector<double> choices(grid.begin(), grid.end());
  const std::vector<double>& beta = v.levels();
  const std::size_t inner = beta.size() - 1;

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> gamma(beta.size(), 1.0);
  std::function<void(std::size_t, std::size_t, double)> place = [&](std::size_t k,
                                                                     std::size_t from,
                                                                     double shift) {
    if (shift >= best) return;
    if (k == inner) {
      best = std::min(best, std::max(shift, sup_distance(space, u, gamma, v.sets())));
      return;
    }
    for (std::size_t c = from; c < choices.size(); ++c) {
      gamma[k] = choices[c];
      place(k + 1, c + 1, std::max(shift, std::fabs(choices[c] - beta[k])));
    }
  };
  place(0, 0, 0.0);
  return best;
}

}  // namespace hyperrec::verify

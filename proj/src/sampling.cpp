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
#include <numeric>

#include "hyperrec/random.hpp"
#include "hyperrec/recurrence.hpp"

namespace hyperrec {

namespace {

// Largest odd denominator tried by the rational grid.
constexpr std::int64_t kMaxGridDenominator = 1 << 15;

// A stretch of the circle [start, start + length) with a preferred first
// sample.
struct Region {
  double start;
  double length;
  Coord first;
};

Coord exact_midpoint(const Arc& arc) {
  const double len = std::fmod(arc.to.value() - arc.from.value() + 1.0, 1.0);
  const double mid = std::fmod(arc.from.value() + 0.5 * len, 1.0);
  if (!arc.from.exact() || !arc.to.exact()) return Coord(mid);
  __extension__ using i128 = __int128;
  const i128 a = arc.from.num();
  const i128 b = arc.from.den();
  const i128 c = arc.to.num();
  const i128 d = arc.to.den();
  i128 num = ((c * b - a * d) % (b * d) + b * d) % (b * d);  // length * bd
  num += 2 * a * d;                                           // mid * 2bd
  i128 den = 2 * b * d;
  i128 x = num;
  i128 y = den;
  while (y != 0) {
    const i128 t = x % y;
    x = y;
    y = t;
  }
  num /= x;
  den /= x;
  if (den > kMaxDenominator) return Coord(mid);
  return Coord::Rational(static_cast<std::int64_t>(num % den), static_cast<std::int64_t>(den));
}

std::vector<Region> circle_regions(const OpenSet& u) {
  std::vector<Region> out;
  if (u.kind() == OpenSet::Kind::kArcUnion) {
    for (const auto& a : u.arcs()) {
      const double len = std::fmod(a.to.value() - a.from.value() + 1.0, 1.0);
      out.push_back({a.from.value(), len, exact_midpoint(a)});
    }
  } else if (u.kind() == OpenSet::Kind::kBallUnion) {
    for (const auto& b : u.balls()) {
      const Coord& c = b.center[0];
      if (b.radius >= 0.5) {
        out.push_back({c.value(), 1.0, c});
      } else {
        out.push_back({c.value() - b.radius + 1.0, 2.0 * b.radius, c});
      }
    }
  }
  return out;
}

void sample_circle(const MetricSpace& space, const OpenSet& u, const SamplingOptions& options,
                   std::vector<Point>& out) {
  const auto regions = circle_regions(u);
  if (regions.empty()) return;
  const std::size_t share = std::max<std::size_t>(1, options.budget / regions.size());
  Rng rng(splitmix64(options.seed));
  auto accept = [&](Coord c, std::vector<Point>& dst) {
    Point p{c};
    if (open_contains(space, u, p)) dst.push_back(space.normalize(std::move(p)));
  };
  for (const auto& r : regions) {
    std::vector<Point> local;
    accept(r.first, local);
    const std::size_t grid_budget = share / 2;
    for (std::int64_t q = 1; q < kMaxGridDenominator && local.size() < grid_budget; q += 2) {
      const auto lo = static_cast<std::int64_t>(std::ceil(r.start * static_cast<double>(q)));
      const auto hi =
          static_cast<std::int64_t>(std::floor((r.start + r.length) * static_cast<double>(q)));
      for (std::int64_t p = lo; p <= hi && local.size() < grid_budget; ++p) {
        const std::int64_t pm = ((p % q) + q) % q;
        if (std::gcd(pm, q) != 1 && !(pm == 0 && q == 1)) continue;
        accept(Coord::Rational(pm, q), local);
      }
    }
    std::size_t attempts = 0;
    while (local.size() < share && attempts < 4 * share) {
      ++attempts;
      accept(Coord(std::fmod(r.start + r.length * rng.uniform(), 1.0)), local);
    }
    out.insert(out.end(), local.begin(), local.end());
  }
}

// Combines per-factor sample lists into tuples, pairing the i-th samples.
std::vector<Point> zip_samples(const std::vector<std::vector<Point>>& per_factor,
                               std::size_t budget) {
  std::size_t longest = 0;
  for (const auto& s : per_factor) {
    if (s.empty()) return {};
    longest = std::max(longest, s.size());
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < std::min(longest, budget); ++i) {
    Point p;
    for (const auto& s : per_factor) {
      const Point& f = s[i % s.size()];
      p.insert(p.end(), f.begin(), f.end());
    }
    out.push_back(std::move(p));
  }
  return out;
}

void sample_into(const MetricSpace& space, const OpenSet& u, const SamplingOptions& options,
                 std::vector<Point>& out) {
  switch (space.kind()) {
    case MetricSpace::Kind::kFinite:
      for (std::size_t i = 0; i < space.size() && out.size() < options.budget; ++i) {
        Point p{Coord(static_cast<double>(i))};
        if (open_contains(space, u, p)) out.push_back(std::move(p));
      }
      return;
    case MetricSpace::Kind::kCircle:
      sample_circle(space, u, options, out);
      return;
    case MetricSpace::Kind::kProduct:
      break;
  }
  const auto factors = space.factors();
  auto factor_samples = [&](const std::vector<OpenSet>& opens) {
    std::vector<std::vector<Point>> per_factor(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      SamplingOptions sub = options;
      sub.seed = derive_seed(options.seed, i + 1);
      sample_into(factors[i], opens[i], sub, per_factor[i]);
    }
    return zip_samples(per_factor, options.budget);
  };
  if (u.kind() == OpenSet::Kind::kProductBox) {
    for (auto& p : factor_samples(u.box())) out.push_back(std::move(p));
    return;
  }
  if (u.kind() == OpenSet::Kind::kBallUnion) {
    // A max-metric ball is the box of the factor balls.
    std::vector<std::vector<Point>> per_ball;
    for (const auto& b : u.balls()) {
      std::vector<OpenSet> opens;
      std::size_t offset = 0;
      for (const auto& f : factors) {
        Point c(b.center.begin() + static_cast<std::ptrdiff_t>(offset),
                b.center.begin() + static_cast<std::ptrdiff_t>(offset + f.dim()));
        opens.push_back(OpenSet::Balls({Ball{std::move(c), b.radius}}));
        offset += f.dim();
      }
      per_ball.push_back(factor_samples(opens));
    }
    for (std::size_t i = 0; out.size() < options.budget; ++i) {
      bool any = false;
      for (const auto& s : per_ball) {
        if (i < s.size()) {
          out.push_back(s[i]);
          any = true;
        }
      }
      if (!any) break;
    }
  }
}

}  // namespace

std::vector<Point> sample_open(const MetricSpace& space, const OpenSet& u,
                               const SamplingOptions& options) {
  validate_open(space, u);
  std::vector<Point> out;
  sample_into(space, u, options, out);
  std::erase_if(out, [&](const Point& p) { return !open_contains(space, u, p); });
  if (out.size() > options.budget) out.resize(options.budget);
  return out;
}

}  // namespace hyperrec

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

#include "hyperrec/hyperspace.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hyperrec {

namespace {

bool point_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Coord& x, const Coord& y) { return x.value() < y.value(); });
}

double point_to_set(const MetricSpace& space, std::span<const Coord> x,
                    const std::vector<Point>& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : set) best = std::min(best, space.distance(x, p));
  return best;
}

void require_same_space(const CompactSet& a, const CompactSet& b) {
  if (!(a.space() == b.space())) {
    throw std::invalid_argument("compact sets live in different spaces: " +
                                a.space().describe() + " vs " + b.space().describe());
  }
}

}  // namespace

CompactSet::CompactSet(MetricSpace space, std::vector<Point> points)
    : space_(std::move(space)) {
  if (points.empty()) throw std::invalid_argument("compact set must be non-empty");
  for (auto& p : points) p = space_.normalize(std::move(p));
  std::sort(points.begin(), points.end(), point_less);
  points_.reserve(points.size());
  for (auto& p : points) {
    if (point_to_set(space_, p, points_) >= kTolerance) points_.push_back(std::move(p));
  }
}

CompactSet CompactSet::FromMask(MetricSpace space, std::uint64_t mask) {
  const std::size_t n = space.size();
  if (mask == 0 || (n < 64 && (mask >> n) != 0)) {
    throw std::invalid_argument("subset mask is empty or out of range");
  }
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    if ((mask >> i) & 1U) pts.push_back(Point{Coord(static_cast<double>(i))});
  }
  return CompactSet(std::move(space), std::move(pts));
}

bool CompactSet::contains(std::span<const Coord> x) const {
  return point_to_set(space_, x, points_) < kTolerance;
}

bool CompactSet::subset_of(const CompactSet& other) const {
  require_same_space(*this, other);
  return std::all_of(points_.begin(), points_.end(),
                     [&](const Point& p) { return other.contains(p); });
}

std::uint64_t CompactSet::mask() const {
  if (space_.kind() != MetricSpace::Kind::kFinite || space_.size() > 64) {
    throw std::logic_error("mask() needs a finite space of at most 64 points");
  }
  std::uint64_t m = 0;
  for (const auto& p : points_) m |= std::uint64_t{1} << static_cast<unsigned>(p[0].value());
  return m;
}

std::string CompactSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0) out += ", ";
    out += hyperrec::to_string(std::span<const Coord>(points_[i]));
  }
  return out + "}";
}

bool operator==(const CompactSet& a, const CompactSet& b) {
  return a.subset_of(b) && b.subset_of(a);
}

CompactSet set_union(const CompactSet& a, const CompactSet& b) {
  require_same_space(a, b);
  std::vector<Point> pts = a.points();
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  return CompactSet(a.space(), std::move(pts));
}

double directed_distance(const CompactSet& from, const CompactSet& to) {
  require_same_space(from, to);
  double worst = 0.0;
  for (const auto& p : from.points()) {
    worst = std::max(worst, point_to_set(from.space(), p, to.points()));
  }
  return worst;
}

double hausdorff(const CompactSet& a, const CompactSet& b) {
  return std::max(directed_distance(a, b), directed_distance(b, a));
}

CompactSet hyper_iterate(const DynSystem& sys, const CompactSet& k, std::uint64_t n) {
  if (!(sys.space() == k.space())) {
    throw std::invalid_argument("compact set is not in the system's space");
  }
  std::vector<Point> image;
  image.reserve(k.size());
  for (const auto& p : k.points()) image.push_back(sys.iterate(p, n));
  return CompactSet(k.space(), std::move(image));
}

CompactSet hyper_apply(const DynSystem& sys, const CompactSet& k) {
  return hyper_iterate(sys, k, 1);
}

VietorisOpen::VietorisOpen(std::vector<OpenSet> u) : opens(std::move(u)) {
  if (opens.empty()) throw std::invalid_argument("Vietoris open needs at least one open set");
}

std::string VietorisOpen::describe() const {
  std::string out = "V(";
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (i > 0) out += "; ";
    out += opens[i].describe();
  }
  return out + ")";
}

bool vietoris_contains(const VietorisOpen& v, const CompactSet& k) {
  const auto& space = k.space();
  for (const auto& u : v.opens) validate_open(space, u);
  for (const auto& p : k.points()) {
    const bool covered = std::any_of(v.opens.begin(), v.opens.end(), [&](const OpenSet& u) {
      return open_contains(space, u, p);
    });
    if (!covered) return false;
  }
  for (const auto& u : v.opens) {
    const bool meets = std::any_of(k.points().begin(), k.points().end(), [&](const Point& p) {
      return open_contains(space, u, p);
    });
    if (!meets) return false;
  }
  return true;
}

bool hausdorff_ball_contains(const CompactSet& center, double eps, const CompactSet& k) {
  if (!(eps > 0.0)) throw std::invalid_argument("ball radius must be positive");
  return hausdorff(center, k) < eps;
}

CompactSet product_embed(std::span<const CompactSet> factors) {
  if (factors.empty()) throw std::invalid_argument("product_embed needs at least one factor");
  const MetricSpace& base = factors.front().space();
  for (const auto& k : factors) {
    if (!(k.space() == base)) {
      throw std::invalid_argument("product_embed factors must share the base space");
    }
  }
  std::vector<Point> tuples{Point{}};
  for (const auto& k : factors) {
    std::vector<Point> next;
    next.reserve(tuples.size() * k.size());
    for (const auto& t : tuples) {
      for (const auto& p : k.points()) {
        Point q = t;
        q.insert(q.end(), p.begin(), p.end());
        next.push_back(std::move(q));
      }
    }
    tuples = std::move(next);
  }
  return CompactSet(MetricSpace::Product(std::vector<MetricSpace>(factors.size(), base)),
                    std::move(tuples));
}

std::vector<CompactSet> enumerate_compacts(const MetricSpace& space, std::size_t max_points) {
  if (space.kind() != MetricSpace::Kind::kFinite) {
    throw std::invalid_argument("enumerate_compacts needs a finite space");
  }
  const std::size_t n = space.size();
  if (n > max_points || n >= 63) {
    throw std::invalid_argument("space of " + std::to_string(n) +
                                " points exceeds the enumeration bound " +
                                std::to_string(max_points));
  }
  std::vector<CompactSet> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(CompactSet::FromMask(space, mask));
  }
  return out;
}

}  // namespace hyperrec

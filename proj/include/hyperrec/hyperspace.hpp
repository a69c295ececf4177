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

#ifndef HYPERREC_HYPERSPACE_HPP_
#define HYPERREC_HYPERSPACE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperrec/space.hpp"

namespace hyperrec {

// A non-empty finite subset of a metric space. Finite sets are compact and
// d_H-dense in the hyperspace of compact sets, and every witness built by the
// recurrence constructions is finite, so this is the working representation
// of K(X).
//
// Points are kept sorted lexicographically and no two stored points are
// closer than kTolerance.
class CompactSet {
 public:
  CompactSet(MetricSpace space, std::vector<Point> points);

  // Subset of a finite space given by a bit mask over point indices.
  static CompactSet FromMask(MetricSpace space, std::uint64_t mask);

  const MetricSpace& space() const { return space_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Membership up to kTolerance.
  bool contains(std::span<const Coord> x) const;
  // Every point of *this lies within kTolerance of `other`.
  bool subset_of(const CompactSet& other) const;
  // Bit mask of a subset of a kFinite space.
  std::uint64_t mask() const;

  // Canonical text form: sorted point list, e.g. "{0.25, 0.75}".
  std::string to_string() const;

  // Two-sided kTolerance coverage.
  friend bool operator==(const CompactSet& a, const CompactSet& b);

 private:
  MetricSpace space_;
  std::vector<Point> points_;
};

CompactSet set_union(const CompactSet& a, const CompactSet& b);

// max over a in `from` of d(a, to).
double directed_distance(const CompactSet& from, const CompactSet& to);
double hausdorff(const CompactSet& a, const CompactSet& b);

CompactSet hyper_apply(const DynSystem& sys, const CompactSet& k);
// The n-th iterate of the hyperextension: f^n applied pointwise.
CompactSet hyper_iterate(const DynSystem& sys, const CompactSet& k, std::uint64_t n);

// Basic Vietoris open V(U_1, ..., U_m).
struct VietorisOpen {
  std::vector<OpenSet> opens;

  explicit VietorisOpen(std::vector<OpenSet> u);
  std::string describe() const;
};

// K covered by the union of the U_j and meeting every U_j.
bool vietoris_contains(const VietorisOpen& v, const CompactSet& k);

// d_H(center, k) < eps.
bool hausdorff_ball_contains(const CompactSet& center, double eps, const CompactSet& k);

// K_1 x ... x K_N inside the N-fold product space.
CompactSet product_embed(std::span<const CompactSet> factors);

// All non-empty subsets of a finite space, ordered by bit mask.
std::vector<CompactSet> enumerate_compacts(const MetricSpace& space, std::size_t max_points = 5);

}  // namespace hyperrec

#endif  // HYPERREC_HYPERSPACE_HPP_

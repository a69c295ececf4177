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

#ifndef HYPERREC_FUZZY_HPP_
#define HYPERREC_FUZZY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperrec/hyperspace.hpp"

namespace hyperrec {

// Normal fuzzy set with finitely many levels 0 < a_1 < ... < a_M = 1 and
// nested level sets L_1 ⊇ ... ⊇ L_M. Represents u(x) = max{a_i : x in L_i},
// so u_a = L_i for a in (a_{i-1}, a_i] and u_0 = L_1.
class StepFuzzySet {
 public:
  StepFuzzySet(std::vector<double> levels, std::vector<CompactSet> sets);

  // chi_K: the single level 1 with set K.
  static StepFuzzySet Characteristic(CompactSet k);

  const std::vector<double>& levels() const { return levels_; }
  const std::vector<CompactSet>& sets() const { return sets_; }
  const MetricSpace& space() const { return sets_.front().space(); }
  std::size_t size() const { return levels_.size(); }

  // Index i of the bracket (a_{i-1}, a_i] holding alpha; alpha = 0 maps to 0.
  std::size_t bracket(double alpha) const;
  double membership(std::span<const Coord> x) const;

  // Same function with redundant levels (L_i = L_{i+1}) removed.
  StepFuzzySet canonical() const;

  // Descending (level, sorted point list) pairs: "[1: {0}; 0.5: {0, 0.3}]".
  std::string to_string() const;

  // Equality as functions X -> [0, 1].
  friend bool operator==(const StepFuzzySet& a, const StepFuzzySet& b);

 private:
  std::vector<double> levels_;
  std::vector<CompactSet> sets_;
};

const CompactSet& level_set(const StepFuzzySet& u, double alpha);

// Zadeh extension, computed level-wise: [f^(u)]_a = f(u_a).
StepFuzzySet zadeh_apply(const DynSystem& sys, const StepFuzzySet& u);
StepFuzzySet zadeh_iterate(const DynSystem& sys, const StepFuzzySet& u, std::uint64_t n);

// Supremum metric: max of d_H(u_a, v_a) over the merged breakpoints.
double d_inf(const StepFuzzySet& u, const StepFuzzySet& v);

// Increasing homeomorphism of [0, 1], piecewise linear through the given
// breakpoints (0 -> 0 and 1 -> 1 are implicit).
class Reparametrization {
 public:
  explicit Reparametrization(std::vector<std::pair<double, double>> breakpoints);

  const std::vector<std::pair<double, double>>& breakpoints() const { return breakpoints_; }
  double operator()(double alpha) const;
  // sup |xi(a) - a|, attained at a breakpoint.
  double displacement() const;

 private:
  std::vector<std::pair<double, double>> breakpoints_;
};

// xi o v: keeps v's level sets and moves each level b to xi(b).
StepFuzzySet reparametrize(const StepFuzzySet& v, const Reparametrization& xi);

struct SkorokhodMatch {
  double distance;
  // Relabeling of v that realizes the distance up to the separation tolerance.
  Reparametrization xi;
};

// Skorokhod-type metric d_0. The infimum over reparametrizations is reduced to
// monotone staircase paths through the (u-level, v-level) bracket grid; the
// exact value is one of finitely many candidates (bracket Hausdorff distances
// and level gaps), and feasibility of each candidate is a dynamic program that
// places every relabeled level as low as possible.
SkorokhodMatch skorokhod_match(const StepFuzzySet& u, const StepFuzzySet& v);
double d_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v);

// Coarsening 0 = a_0 < a_1 < ... < a_N = 1 of u's own breakpoints with
// d_H(u_a, u_{a_{i+1}}) < eps for every a in (a_i, a_{i+1}], merging brackets
// right to left.
std::vector<double> stratify(const StepFuzzySet& u, double eps);

// max_i(a_i * chi_{K_i}); level a_i carries the tail union K_i ∪ ... ∪ K_N.
StepFuzzySet witness_fuzzy(std::span<const double> levels, std::span<const CompactSet> compacts);

}  // namespace hyperrec

#endif  // HYPERREC_FUZZY_HPP_

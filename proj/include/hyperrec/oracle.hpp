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

#ifndef HYPERREC_ORACLE_HPP_
#define HYPERREC_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hyperrec/recurrence.hpp"

namespace hyperrec {

// Exhaustive cross-checks between recurrence of a small finite system, of
// its finite products, of its hyperextension on compact sets and of its
// Zadeh extension on fuzzy sets.

struct StatementVerdict {
  std::string statement;
  bool holds = false;
  // "exact", "probed", "windowed" or "witnessed".
  std::string semantics;
  std::string detail;
};

struct EquivalenceReport {
  std::string system;
  // "compact_sets", "fuzzy_sets", "point_recurrence", "ap_recurrence" or
  // "quasi_rigidity".
  std::string check;
  std::vector<StatementVerdict> verdicts;
  bool agreement = true;
  // Witnesses and counterexamples in text form.
  std::vector<std::string> payloads;

  const StatementVerdict& verdict(const std::string& statement) const;
};

// f acting on all non-empty subsets of a finite space, states in bit-mask
// order (state s is the subset with mask s + 1), metrized by Hausdorff
// distance.
DynSystem materialize_hyperspace(const DynSystem& sys);

// All normal fuzzy sets with values in {0, 1/m, ..., 1} on a finite space.
// The Zadeh extension maps this family to itself.
struct FuzzyGrid {
  std::vector<StepFuzzySet> sets;
  std::vector<std::size_t> table;  // Zadeh extension as a map on indices
  DynSystem sup_system;            // metrized by d_inf
  DynSystem skorokhod_system;      // metrized by d_skorokhod
};

FuzzyGrid materialize_fuzzy_grid(const DynSystem& sys, std::size_t m);

// Open balls of a finite space at every radius that changes the ball:
// midpoints between consecutive distinct distances from each center, plus one
// radius above the largest. Balls with equal member sets are listed once.
std::vector<OpenSet> exhaustive_ball_probes(const MetricSpace& space);

// Horizon used for finite checks; certificates make the verdicts exact for
// every horizon.
inline constexpr std::uint64_t kOracleHorizon = 24;

// Recurrence of the N-fold products (N up to n_max) against recurrence of
// the hyperextension, and of its 2-fold product when small. Product verdicts
// are exact when n_max reaches the number of distinct cycle lengths: a
// singleton of a product returns exactly at the common multiples of the
// coordinate cycle lengths, so longer tuples repeat a length already seen.
EquivalenceReport check_compact_equivalence(const DynSystem& sys, std::size_t ell,
                                            const FamilySpec& spec, std::size_t n_max);

// The compact-set statements plus recurrence of the Zadeh extension on the
// level-m fuzzy grid under d_inf and under d_skorokhod.
EquivalenceReport check_fuzzy_equivalence(const DynSystem& sys, std::size_t ell,
                                          const FamilySpec& spec, std::size_t m);

enum class DescentMode { kPoint, kAP, kQuasiRigid };

struct DescentBudgets {
  std::uint64_t horizon = 1000;
  double eps = 0.05;
  std::size_t sample_points = 20;
  std::size_t grid_levels = 2;
  std::size_t ap_target = 8;
  SamplingOptions sampling;
};

// Point, AP or quasi-rigid recurrence at base, compact-set and fuzzy level,
// plus witness transport between the levels.
EquivalenceReport check_point_rec_descent(const DynSystem& sys, DescentMode mode,
                                          const DescentBudgets& budgets = {});

struct TransportResult {
  bool closed = false;
  std::string detail;
};

// base point witnesses -> compact witness -> fuzzy witness -> top level set,
// asserting every "< eps" bound on the way, for the open U = ball(K, eps/2)
// style target around `k` at time n.
TransportResult transport_witnesses(const DynSystem& sys, const CompactSet& k, double eps,
                                    std::uint64_t n, std::size_t ell,
                                    const SamplingOptions& options = {});

}  // namespace hyperrec

#endif  // HYPERREC_ORACLE_HPP_

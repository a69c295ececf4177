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

#ifndef HYPERREC_RECURRENCE_HPP_
#define HYPERREC_RECURRENCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperrec/fuzzy.hpp"

namespace hyperrec {

// How far a verdict can be trusted.
//   exact     - decided for all n (finite systems with a period certificate)
//   windowed  - decided on [0, H] only
//   witnessed - inclusions certified by sample points; exclusions only mean
//               "no witness at this budget"
enum class Semantics { kExact, kWindowed, kWitnessed };

std::string_view to_string(Semantics s);

// Membership of n >= preperiod is pattern[(n - preperiod) % period].
struct Certificate {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::vector<bool> pattern;

  bool member(std::uint64_t n) const;
};

// A set of return times restricted to [0, H].
class ReturnWindow {
 public:
  ReturnWindow(std::uint64_t horizon, std::vector<std::uint64_t> members, Semantics semantics,
               std::optional<Certificate> certificate = std::nullopt);

  std::uint64_t horizon() const { return horizon_; }
  const std::vector<std::uint64_t>& members() const { return members_; }
  Semantics semantics() const { return semantics_; }
  const std::optional<Certificate>& certificate() const { return certificate_; }

  bool contains(std::uint64_t n) const;
  // Maximal runs of consecutive members as (start, length).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs() const;

 private:
  std::uint64_t horizon_;
  std::vector<std::uint64_t> members_;
  Semantics semantics_;
  std::optional<Certificate> certificate_;
};

// Sample points drawn from open sets on continuous spaces: exact rationals
// p/q with odd q first (these carry periodic orbits of the doubling map),
// then fixed-seed uniform points.
struct SamplingOptions {
  std::size_t budget = 512;
  std::uint64_t seed = 0;
};

// Longest period accepted for an exactness certificate.
inline constexpr std::uint64_t kMaxCertifiedPeriod = std::uint64_t{1} << 20;

std::vector<Point> sample_open(const MetricSpace& space, const OpenSet& u,
                               const SamplingOptions& options = {});

// Times n <= H with f^n(U) meeting V.
ReturnWindow return_set(const DynSystem& sys, const OpenSet& u, const OpenSet& v,
                        std::uint64_t horizon, const SamplingOptions& options = {});

// Times n <= H at which one point visits U at 0, n, 2n, ..., ell*n.
ReturnWindow ell_return_set(const DynSystem& sys, const OpenSet& u, std::size_t ell,
                            std::uint64_t horizon, const SamplingOptions& options = {});

class FamilySpec {
 public:
  enum class Kind {
    kInfiniteExact,
    kInfiniteWindow,  // at least `param` members n >= 1
    kCofiniteExact,
    kThickWindow,     // `param` consecutive members
    kSyndeticWindow,  // every gap at most `param`
    kContainsAP,      // arithmetic progression of `param` terms
  };

  static FamilySpec InfiniteExact() { return {Kind::kInfiniteExact, 0}; }
  static FamilySpec InfiniteWindow(std::uint64_t min_count);
  static FamilySpec CofiniteExact() { return {Kind::kCofiniteExact, 0}; }
  static FamilySpec ThickWindow(std::uint64_t run_length);
  static FamilySpec SyndeticWindow(std::uint64_t max_gap);
  static FamilySpec ContainsAP(std::uint64_t length);

  // "infinite_exact", "thick_window(3)", ...
  static FamilySpec Parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t param() const { return param_; }
  bool exact() const { return kind_ == Kind::kInfiniteExact || kind_ == Kind::kCofiniteExact; }
  std::string describe() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilySpec(Kind kind, std::uint64_t param) : kind_(kind), param_(param) {}
  Kind kind_;
  std::uint64_t param_;
};

struct FamilyVerdict {
  bool holds = false;
  Semantics semantics = Semantics::kWindowed;
  std::string diagnostic;
};

// Throws std::invalid_argument for exact specs on windows without a
// certificate.
FamilyVerdict family_eval(const ReturnWindow& w, const FamilySpec& spec);

// First progression of `length` terms inside the window, as (start, step),
// scanning starts in increasing order and steps from 1.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_progression(const ReturnWindow& w,
                                                                        std::uint64_t length);

struct ProbeVerdict {
  std::string probe;
  ReturnWindow window;
  FamilyVerdict verdict;
};

struct SystemVerdict {
  bool holds = true;
  Semantics semantics = Semantics::kExact;
  // True when the probes contain every singleton of a finite space. Every
  // open set of a finite space is then a union of probes, and a union
  // inherits the return times of each member, so the verdict covers all
  // open sets.
  bool exhaustive = false;
  std::vector<ProbeVerdict> probes;

  std::string scope() const { return exhaustive ? "exhaustive" : "over probe family"; }
};

SystemVerdict is_rec_system(const DynSystem& sys, std::span<const OpenSet> probes,
                            std::size_t ell, const FamilySpec& spec, std::uint64_t horizon,
                            const SamplingOptions& options = {});

// One singleton open per state of a finite space, in state order.
std::vector<OpenSet> singleton_probes(const MetricSpace& space);

// Finite K with f^{jn}(K) in V for every 0 <= j <= ell, or none. Candidates
// whose orbit segment stays inside the union of V are kept, and a small
// subset meeting every open at every j is picked greedily. On finite spaces
// every point is a candidate, so absence proves that no witness exists.
std::optional<CompactSet> hyper_rec_witness(const DynSystem& sys, const VietorisOpen& v,
                                            std::uint64_t n, std::size_t ell,
                                            const SamplingOptions& options = {});
// Same for the Hausdorff ball of radius eps around `center`.
std::optional<CompactSet> hyper_rec_witness(const DynSystem& sys, const CompactSet& center,
                                            double eps, std::uint64_t n, std::size_t ell,
                                            const SamplingOptions& options = {});

// v with d_inf(u, zadeh^{jn}(v)) < eps for every 0 <= j <= ell, assembled
// from Hausdorff-ball witnesses of radius eps/2 around the stratified levels
// of u.
std::optional<StepFuzzySet> fuzzy_rec_witness(const DynSystem& sys, const StepFuzzySet& u,
                                              double eps, std::uint64_t n, std::size_t ell,
                                              const SamplingOptions& options = {});

// Top level set of v.
CompactSet fuzzy_to_hyper_witness(const StepFuzzySet& v);

inline constexpr std::size_t kMaxApLength = 12;

struct PointRecurrence {
  ReturnWindow window;
  // ap[l - 2] tells whether an l-term progression lies in the window.
  std::vector<bool> ap;
  // Longest progression found, at most kMaxApLength.
  std::size_t max_ap = 0;
};

// Times n <= H with d(f^n(x), x) < eps.
PointRecurrence point_recurrence(const DynSystem& sys, std::span<const Coord> x, double eps,
                                 std::uint64_t horizon);

struct QuasiRigidity {
  std::vector<std::uint64_t> times;
  // Largest sample displacement at each returned time.
  std::vector<double> residuals;
  // Number of schedule entries served before H ran out.
  std::size_t served = 0;
};

// 0.1 * 2^-k for k = 0..12.
std::vector<double> default_eps_schedule();

// For each eps in turn, the smallest n beyond the previous time with
// max_x d(f^n(x), x) < eps over the sample.
QuasiRigidity quasi_rigidity_search(const DynSystem& sys, std::span<const Point> sample,
                                    std::span<const double> schedule, std::uint64_t horizon);

}  // namespace hyperrec

#endif  // HYPERREC_RECURRENCE_HPP_

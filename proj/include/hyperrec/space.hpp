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

#ifndef HYPERREC_SPACE_HPP_
#define HYPERREC_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hyperrec {

// Global equality tolerance for real-valued coordinates and distances.
inline constexpr double kTolerance = 1e-9;

// Largest denominator accepted for exact rational coordinates. Keeps every
// cross-multiplication inside __int128.
inline constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 31;

// One coordinate of a point. Finite-space coordinates hold an index; circle
// coordinates hold a real in [0, 1), optionally backed by an exact rational
// so that the doubling map can follow periodic orbits without round-off.
class Coord {
 public:
  Coord(double value = 0.0) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static Coord Rational(std::int64_t num, std::int64_t den);

  double value() const { return value_; }
  bool exact() const { return den_ > 0; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

 private:
  double value_ = 0.0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 0;
};

using Point = std::vector<Coord>;

std::string to_string(const Coord& c);
std::string to_string(std::span<const Coord> p);

// A computable metric space: a finite table space, the unit-circumference
// circle, or a finite product carrying the max metric. Points of a product are
// flat: the coordinates of factor i occupy a contiguous slice.
class MetricSpace {
 public:
  enum class Kind { kFinite, kCircle, kProduct };

  // n points, all off-diagonal distances 1.
  static MetricSpace Discrete(std::size_t n);
  // Validates symmetry, zero diagonal, positive off-diagonal entries and the
  // triangle inequality (up to kTolerance).
  static MetricSpace Finite(std::vector<std::vector<double>> distances);
  static MetricSpace Circle();
  static MetricSpace Product(std::vector<MetricSpace> factors);

  Kind kind() const;
  // Number of points of a kFinite space; throws for other kinds.
  std::size_t size() const;
  // Number of flat coordinates of a point.
  std::size_t dim() const;
  std::span<const MetricSpace> factors() const;

  // True for kFinite and for products whose factors are all finite.
  bool is_finite() const;
  // Number of points of a finite space (product of factor sizes).
  std::size_t cardinality() const;

  double distance(std::span<const Coord> x, std::span<const Coord> y) const;
  // Throws std::out_of_range / std::invalid_argument for malformed points.
  void validate(std::span<const Coord> x) const;
  // Reduces circle coordinates mod 1.
  Point normalize(Point x) const;

  // Row-major n x n distance table of a kFinite space.
  double table_distance(std::size_t i, std::size_t j) const;
  bool is_discrete() const;

  std::string describe() const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b);

 private:
  struct Impl;
  explicit MetricSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Tail and cycle data of a self-map of {0, ..., n-1}. For every x and every
// n >= preperiod, f^(n + period)(x) = f^n(x).
struct CycleStructure {
  std::vector<std::size_t> tail;        // steps until x enters its cycle
  std::vector<std::size_t> cycle_of;    // index into cycles
  std::vector<std::size_t> cycle_pos;   // position of the entry point
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t preperiod = 0;
  // lcm of the cycle lengths; empty when it overflows 64 bits.
  std::optional<std::uint64_t> period;

  static CycleStructure Of(std::span<const std::size_t> table);
  std::size_t image(std::span<const std::size_t> table, std::size_t x,
                    std::uint64_t n) const;
  std::vector<std::size_t> cycle_lengths() const;
};

class DynSystem {
 public:
  enum class Kind { kFiniteMap, kRotation, kDoubling, kProduct };

  // Self-map of the discrete space on table.size() points.
  static DynSystem FiniteMap(std::vector<std::size_t> table);
  static DynSystem FiniteMap(MetricSpace space, std::vector<std::size_t> table);
  static DynSystem Rotation(double theta);
  static DynSystem Doubling();
  static DynSystem Product(std::vector<DynSystem> factors);

  Kind kind() const;
  const MetricSpace& space() const;

  Point apply(std::span<const Coord> x) const;
  Point iterate(std::span<const Coord> x, std::uint64_t n) const;

  // kFiniteMap only.
  const std::vector<std::size_t>& table() const;
  const CycleStructure& cycles() const;
  std::size_t image(std::size_t x, std::uint64_t n) const;

  double theta() const;
  std::span<const DynSystem> factors() const;

  std::string describe() const;

 private:
  struct Impl;
  explicit DynSystem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void iterate_into(std::span<const Coord> x, std::uint64_t n,
                    std::span<Coord> out) const;
  std::shared_ptr<const Impl> impl_;
};

// N-fold direct product f x ... x f acting coordinatewise on X^N.
DynSystem n_fold(const DynSystem& sys, std::size_t n);

// Open arc running counterclockwise from `from` to `to`; wraps through 0 when
// from > to.
struct Arc {
  Coord from;
  Coord to;
};

struct Ball {
  Point center;
  double radius;
};

class OpenSet {
 public:
  enum class Kind { kFiniteSubset, kArcUnion, kBallUnion, kProductBox };

  static OpenSet Subset(std::vector<std::size_t> indices);
  static OpenSet Arcs(std::vector<Arc> arcs);
  static OpenSet Balls(std::vector<Ball> balls);
  static OpenSet Box(std::vector<OpenSet> factors);

  Kind kind() const;
  const std::vector<std::size_t>& indices() const;
  const std::vector<Arc>& arcs() const;
  const std::vector<Ball>& balls() const;
  const std::vector<OpenSet>& box() const;

  std::string describe() const;

 private:
  using Rep = std::variant<std::vector<std::size_t>, std::vector<Arc>,
                           std::vector<Ball>, std::vector<OpenSet>>;
  explicit OpenSet(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

// Throws std::invalid_argument when `u` does not fit `space`.
void validate_open(const MetricSpace& space, const OpenSet& u);

// Exact membership; balls use the strict inequality dist(x, c) < r.
bool open_contains(const MetricSpace& space, const OpenSet& u,
                   std::span<const Coord> x);

// A system on a finite space (a kFinite space or a product of them) seen as a
// single transition table over mixed-radix encoded states.
class FiniteView {
 public:
  explicit FiniteView(const DynSystem& sys);

  std::size_t size() const { return table_.size(); }
  std::size_t encode(std::span<const Coord> x) const;
  Point decode(std::size_t state) const;
  const std::vector<std::size_t>& table() const { return table_; }
  const CycleStructure& cycles() const { return cycles_; }
  std::size_t image(std::size_t state, std::uint64_t n) const {
    return cycles_.image(table_, state, n);
  }
  // Encoded states lying in `u`, ascending.
  std::vector<std::size_t> members(const OpenSet& u) const;
  const DynSystem& system() const { return sys_; }

 private:
  DynSystem sys_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> table_;
  CycleStructure cycles_;
};

}  // namespace hyperrec

#endif  // HYPERREC_SPACE_HPP_

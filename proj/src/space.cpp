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

#include "hyperrec/space.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperrec {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

i128 floor_mod(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

double mod1(double v) {
  double r = std::fmod(v, 1.0);
  if (r < 0) r += 1.0;
  if (r >= 1.0) r = 0.0;
  return r;
}

// Exact fraction with a positive denominator, used for arc and distance
// arithmetic on rational coordinates.
struct Frac {
  i128 num;
  i128 den;
};

Frac frac_of(const Coord& c) { return {c.num(), c.den()}; }

// (a - b) mod 1, in [0, 1).
Frac sub_mod1(const Frac& a, const Frac& b) {
  const i128 den = a.den * b.den;
  return {floor_mod(a.num * b.den - b.num * a.den, den), den};
}

bool frac_less(const Frac& a, const Frac& b) {
  return a.num * b.den < b.num * a.den;
}

std::uint64_t pow2_mod(std::uint64_t n, std::uint64_t m) {
  if (m == 1) return 0;
  u128 result = 1;
  u128 base = 2 % m;
  while (n > 0) {
    if (n & 1U) result = (result * base) % m;
    base = (base * base) % m;
    n >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::size_t index_of(const Coord& c, std::size_t n) {
  const double v = c.value();
  if (!(v >= 0.0) || v != std::floor(v) || v >= static_cast<double>(n)) {
    throw std::out_of_range("finite-space index " + to_string(c) +
                            " out of range [0, " + std::to_string(n) + ")");
  }
  return static_cast<std::size_t>(v);
}

Coord normalize_circle(const Coord& c) {
  if (c.exact()) {
    return Coord::Rational(
        static_cast<std::int64_t>(floor_mod(c.num(), c.den())), c.den());
  }
  return Coord(mod1(c.value()));
}

double circle_distance(const Coord& a, const Coord& b) {
  if (a.exact() && b.exact()) {
    const Frac t = sub_mod1(frac_of(a), frac_of(b));
    const long double r = static_cast<long double>(t.num) /
                          static_cast<long double>(t.den);
    return static_cast<double>(std::min(r, 1.0L - r));
  }
  const double t = mod1(std::fabs(a.value() - b.value()));
  return std::min(t, 1.0 - t);
}

bool arc_contains(const Arc& arc, const Coord& x) {
  if (arc.from.exact() && arc.to.exact() && x.exact()) {
    const Frac len = sub_mod1(frac_of(arc.to), frac_of(arc.from));
    const Frac t = sub_mod1(frac_of(x), frac_of(arc.from));
    return t.num > 0 && frac_less(t, len);
  }
  const double len = mod1(arc.to.value() - arc.from.value());
  const double t = mod1(x.value() - arc.from.value());
  return t > 0.0 && t < len;
}

double arc_length(const Arc& arc) {
  return mod1(arc.to.value() - arc.from.value());
}

}  // namespace

// ---------------------------------------------------------------------------
// Coord

Coord Coord::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational coordinate with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den > kMaxDenominator) {
    throw std::invalid_argument("rational coordinate denominator exceeds 2^31");
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  Coord c(static_cast<double>(num) / static_cast<double>(den));
  c.num_ = num / g;
  c.den_ = den / g;
  c.value_ = static_cast<double>(c.num_) / static_cast<double>(c.den_);
  return c;
}

std::string to_string(const Coord& c) {
  if (c.exact()) {
    if (c.den() == 1) return std::to_string(c.num());
    return std::to_string(c.num()) + "/" + std::to_string(c.den());
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), c.value());
  return std::string(buf, res.ptr);
}

std::string to_string(std::span<const Coord> p) {
  if (p.size() == 1) return to_string(p[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// MetricSpace

struct MetricSpace::Impl {
  Kind kind = Kind::kFinite;
  std::size_t n = 0;
  bool discrete = false;
  std::vector<double> matrix;  // row-major, empty when discrete
  std::vector<MetricSpace> factors;
  std::vector<std::size_t> offsets;
  std::size_t dim = 1;
};

MetricSpace MetricSpace::Discrete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("finite space needs at least one point");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kFinite;
  impl->n = n;
  impl->discrete = true;
  return MetricSpace(std::move(impl));
}

MetricSpace MetricSpace::Finite(std::vector<std::vector<double>> distances) {
  const std::size_t n = distances.size();
  if (n == 0) throw std::invalid_argument("finite space needs at least one point");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kFinite;
  impl->n = n;
  impl->matrix.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) {
      throw std::invalid_argument("distance matrix is not square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double d = distances[i][j];
      if (!std::isfinite(d) || d < 0.0) {
        throw std::invalid_argument("distance matrix has a negative or non-finite entry");
      }
      if (i == j && d > kTolerance) {
        throw std::invalid_argument("distance matrix has a non-zero diagonal");
      }
      if (i != j && d <= kTolerance) {
        throw std::invalid_argument("distinct points at distance zero");
      }
      impl->matrix[i * n + j] = i == j ? 0.0 : d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::fabs(impl->matrix[i * n + j] - impl->matrix[j * n + i]) > kTolerance) {
        throw std::invalid_argument("distance matrix is not symmetric");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (impl->matrix[i * n + k] >
            impl->matrix[i * n + j] + impl->matrix[j * n + k] + kTolerance) {
          throw std::invalid_argument("distance matrix violates the triangle inequality");
        }
      }
    }
  }
  impl->discrete = std::all_of(
      impl->matrix.begin(), impl->matrix.end(),
      [](double d) { return d == 0.0 || d == 1.0; });
  return MetricSpace(std::move(impl));
}

MetricSpace MetricSpace::Circle() {
  static const auto kCircle = [] {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::kCircle;
    return std::shared_ptr<const Impl>(std::move(impl));
  }();
  return MetricSpace(kCircle);
}

MetricSpace MetricSpace::Product(std::vector<MetricSpace> factors) {
  if (factors.empty()) throw std::invalid_argument("product of zero factors");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kProduct;
  impl->dim = 0;
  for (const auto& f : factors) {
    impl->offsets.push_back(impl->dim);
    impl->dim += f.dim();
  }
  impl->factors = std::move(factors);
  return MetricSpace(std::move(impl));
}

MetricSpace::Kind MetricSpace::kind() const { return impl_->kind; }

std::size_t MetricSpace::size() const {
  if (impl_->kind != Kind::kFinite) throw std::logic_error("size() of a non-finite space");
  return impl_->n;
}

std::size_t MetricSpace::dim() const { return impl_->dim; }

std::span<const MetricSpace> MetricSpace::factors() const { return impl_->factors; }

bool MetricSpace::is_finite() const {
  switch (impl_->kind) {
    case Kind::kFinite:
      return true;
    case Kind::kCircle:
      return false;
    case Kind::kProduct:
      return std::all_of(impl_->factors.begin(), impl_->factors.end(),
                         [](const MetricSpace& f) { return f.is_finite(); });
  }
  return false;
}

std::size_t MetricSpace::cardinality() const {
  if (!is_finite()) throw std::logic_error("cardinality() of an infinite space");
  if (impl_->kind == Kind::kFinite) return impl_->n;
  std::size_t total = 1;
  for (const auto& f : impl_->factors) {
    const std::size_t c = f.cardinality();
    if (total > std::numeric_limits<std::size_t>::max() / c) {
      throw std::overflow_error("product space too large to enumerate");
    }
    total *= c;
  }
  return total;
}

double MetricSpace::table_distance(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  if (impl_->discrete && impl_->matrix.empty()) return 1.0;
  return impl_->matrix[i * impl_->n + j];
}

bool MetricSpace::is_discrete() const {
  return impl_->kind == Kind::kFinite && impl_->discrete;
}

double MetricSpace::distance(std::span<const Coord> x, std::span<const Coord> y) const {
  if (x.size() != impl_->dim || y.size() != impl_->dim) {
    throw std::invalid_argument("point dimension does not match the space");
  }
  switch (impl_->kind) {
    case Kind::kFinite:
      return table_distance(index_of(x[0], impl_->n), index_of(y[0], impl_->n));
    case Kind::kCircle:
      return circle_distance(x[0], y[0]);
    case Kind::kProduct: {
      double d = 0.0;
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        const auto& f = impl_->factors[i];
        d = std::max(d, f.distance(x.subspan(impl_->offsets[i], f.dim()),
                                   y.subspan(impl_->offsets[i], f.dim())));
      }
      return d;
    }
  }
  return 0.0;
}

void MetricSpace::validate(std::span<const Coord> x) const {
  if (x.size() != impl_->dim) {
    throw std::invalid_argument("point dimension does not match the space");
  }
  switch (impl_->kind) {
    case Kind::kFinite:
      index_of(x[0], impl_->n);
      return;
    case Kind::kCircle:
      if (!std::isfinite(x[0].value())) {
        throw std::invalid_argument("circle coordinate is not finite");
      }
      return;
    case Kind::kProduct:
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        const auto& f = impl_->factors[i];
        f.validate(x.subspan(impl_->offsets[i], f.dim()));
      }
      return;
  }
}

Point MetricSpace::normalize(Point x) const {
  validate(x);
  switch (impl_->kind) {
    case Kind::kFinite:
      return x;
    case Kind::kCircle:
      x[0] = normalize_circle(x[0]);
      return x;
    case Kind::kProduct:
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        const auto& f = impl_->factors[i];
        const auto first = x.begin() + static_cast<std::ptrdiff_t>(impl_->offsets[i]);
        Point slice = f.normalize(Point(first, first + static_cast<std::ptrdiff_t>(f.dim())));
        std::copy(slice.begin(), slice.end(), first);
      }
      return x;
  }
  return x;
}

std::string MetricSpace::describe() const {
  switch (impl_->kind) {
    case Kind::kFinite:
      return "finite(" + std::to_string(impl_->n) + (is_discrete() ? ")" : ", metric)");
    case Kind::kCircle:
      return "circle";
    case Kind::kProduct: {
      std::string out = "product(";
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        if (i > 0) out += ", ";
        out += impl_->factors[i].describe();
      }
      return out + ")";
    }
  }
  return "?";
}

bool operator==(const MetricSpace& a, const MetricSpace& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case MetricSpace::Kind::kFinite:
      if (x.n != y.n) return false;
      if (x.discrete && y.discrete) return true;
      for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t j = 0; j < x.n; ++j) {
          if (a.table_distance(i, j) != b.table_distance(i, j)) return false;
        }
      }
      return true;
    case MetricSpace::Kind::kCircle:
      return true;
    case MetricSpace::Kind::kProduct:
      return x.factors == y.factors;
  }
  return false;
}

// ---------------------------------------------------------------------------
// CycleStructure

CycleStructure CycleStructure::Of(std::span<const std::size_t> table) {
  const std::size_t n = table.size();
  CycleStructure cs;
  cs.tail.assign(n, 0);
  cs.cycle_of.assign(n, 0);
  cs.cycle_pos.assign(n, 0);
  enum : unsigned char { kNew, kOnPath, kDone };
  std::vector<unsigned char> state(n, kNew);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != kNew) continue;
    path.clear();
    std::size_t x = start;
    while (state[x] == kNew) {
      state[x] = kOnPath;
      path.push_back(x);
      x = table[x];
    }
    std::size_t stop = path.size();
    if (state[x] == kOnPath) {
      // x closes a new cycle inside the current path.
      const auto it = std::find(path.begin(), path.end(), x);
      stop = static_cast<std::size_t>(it - path.begin());
      std::vector<std::size_t> cycle(it, path.end());
      const std::size_t id = cs.cycles.size();
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        cs.tail[cycle[k]] = 0;
        cs.cycle_of[cycle[k]] = id;
        cs.cycle_pos[cycle[k]] = k;
        state[cycle[k]] = kDone;
      }
      cs.cycles.push_back(std::move(cycle));
    }
    for (std::size_t k = stop; k-- > 0;) {
      const std::size_t y = path[k];
      const std::size_t next = table[y];
      cs.tail[y] = cs.tail[next] + 1;
      cs.cycle_of[y] = cs.cycle_of[next];
      cs.cycle_pos[y] = cs.cycle_pos[next];
      state[y] = kDone;
    }
  }
  cs.preperiod = n == 0 ? 0 : *std::max_element(cs.tail.begin(), cs.tail.end());
  std::uint64_t lcm = 1;
  bool overflow = false;
  for (const auto& c : cs.cycles) {
    const std::uint64_t len = c.size();
    const std::uint64_t g = std::gcd(lcm, len);
    if (lcm / g > std::numeric_limits<std::uint64_t>::max() / len) {
      overflow = true;
      break;
    }
    lcm = lcm / g * len;
  }
  if (!overflow) cs.period = lcm;
  return cs;
}

std::size_t CycleStructure::image(std::span<const std::size_t> table, std::size_t x,
                                  std::uint64_t n) const {
  if (n < tail[x]) {
    for (std::uint64_t k = 0; k < n; ++k) x = table[x];
    return x;
  }
  const auto& cycle = cycles[cycle_of[x]];
  const std::uint64_t steps = n - tail[x];
  return cycle[(cycle_pos[x] + steps % cycle.size()) % cycle.size()];
}

std::vector<std::size_t> CycleStructure::cycle_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.size());
  return out;
}

// ---------------------------------------------------------------------------
// DynSystem

struct DynSystem::Impl {
  Kind kind = Kind::kFiniteMap;
  MetricSpace space = MetricSpace::Circle();
  std::vector<std::size_t> table;
  CycleStructure cycles;
  double theta = 0.0;
  std::vector<DynSystem> factors;
  std::vector<std::size_t> offsets;
};

DynSystem DynSystem::FiniteMap(std::vector<std::size_t> table) {
  const std::size_t n = table.size();
  return FiniteMap(MetricSpace::Discrete(n), std::move(table));
}

DynSystem DynSystem::FiniteMap(MetricSpace space, std::vector<std::size_t> table) {
  if (space.kind() != MetricSpace::Kind::kFinite) {
    throw std::invalid_argument("finite map needs a finite space");
  }
  if (table.size() != space.size()) {
    throw std::invalid_argument("finite map table length differs from the space size");
  }
  for (std::size_t v : table) {
    if (v >= table.size()) {
      throw std::out_of_range("finite map image index " + std::to_string(v) +
                              " out of range");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kFiniteMap;
  impl->space = std::move(space);
  impl->cycles = CycleStructure::Of(table);
  impl->table = std::move(table);
  return DynSystem(std::move(impl));
}

DynSystem DynSystem::Rotation(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle is not finite");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kRotation;
  impl->theta = mod1(theta);
  return DynSystem(std::move(impl));
}

DynSystem DynSystem::Doubling() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kDoubling;
  return DynSystem(std::move(impl));
}

DynSystem DynSystem::Product(std::vector<DynSystem> factors) {
  if (factors.empty()) throw std::invalid_argument("product of zero systems");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kProduct;
  std::vector<MetricSpace> spaces;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    spaces.push_back(f.space());
    impl->offsets.push_back(offset);
    offset += f.space().dim();
  }
  impl->space = MetricSpace::Product(std::move(spaces));
  impl->factors = std::move(factors);
  return DynSystem(std::move(impl));
}

DynSystem::Kind DynSystem::kind() const { return impl_->kind; }
const MetricSpace& DynSystem::space() const { return impl_->space; }

const std::vector<std::size_t>& DynSystem::table() const {
  if (impl_->kind != Kind::kFiniteMap) throw std::logic_error("table() of a non-finite map");
  return impl_->table;
}

const CycleStructure& DynSystem::cycles() const {
  if (impl_->kind != Kind::kFiniteMap) throw std::logic_error("cycles() of a non-finite map");
  return impl_->cycles;
}

std::size_t DynSystem::image(std::size_t x, std::uint64_t n) const {
  const auto& t = table();
  if (x >= t.size()) throw std::out_of_range("finite map point out of range");
  return impl_->cycles.image(t, x, n);
}

double DynSystem::theta() const { return impl_->theta; }
std::span<const DynSystem> DynSystem::factors() const { return impl_->factors; }

void DynSystem::iterate_into(std::span<const Coord> x, std::uint64_t n,
                             std::span<Coord> out) const {
  switch (impl_->kind) {
    case Kind::kFiniteMap: {
      const std::size_t i = static_cast<std::size_t>(x[0].value());
      out[0] = Coord(static_cast<double>(impl_->cycles.image(impl_->table, i, n)));
      return;
    }
    case Kind::kRotation: {
      const long double v = static_cast<long double>(x[0].value()) +
                            static_cast<long double>(n) * impl_->theta;
      long double r = std::fmod(v, 1.0L);
      if (r < 0) r += 1.0L;
      out[0] = Coord(mod1(static_cast<double>(r)));
      return;
    }
    case Kind::kDoubling: {
      const Coord& c = x[0];
      if (c.exact()) {
        const auto den = static_cast<std::uint64_t>(c.den());
        const auto num = static_cast<std::uint64_t>(floor_mod(c.num(), c.den()));
        const u128 r =
            (static_cast<u128>(num) * pow2_mod(n, den)) % den;
        out[0] = Coord::Rational(static_cast<std::int64_t>(r), c.den());
        return;
      }
      // Every double is a dyadic rational, so shifting in 52-bit chunks and
      // reducing mod 1 is exact.
      double v = mod1(c.value());
      std::uint64_t left = n;
      while (left > 0 && v != 0.0) {
        const int step = static_cast<int>(std::min<std::uint64_t>(left, 52));
        v = std::fmod(std::ldexp(v, step), 1.0);
        left -= static_cast<std::uint64_t>(step);
      }
      out[0] = Coord(v);
      return;
    }
    case Kind::kProduct:
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        const auto& f = impl_->factors[i];
        const std::size_t d = f.space().dim();
        f.iterate_into(x.subspan(impl_->offsets[i], d), n,
                       out.subspan(impl_->offsets[i], d));
      }
      return;
  }
}

Point DynSystem::iterate(std::span<const Coord> x, std::uint64_t n) const {
  impl_->space.validate(x);
  Point out(x.begin(), x.end());
  if (impl_->space.kind() == MetricSpace::Kind::kCircle ||
      impl_->space.kind() == MetricSpace::Kind::kProduct) {
    out = impl_->space.normalize(std::move(out));
  }
  Point result(out.size());
  iterate_into(out, n, result);
  return result;
}

Point DynSystem::apply(std::span<const Coord> x) const { return iterate(x, 1); }

std::string DynSystem::describe() const {
  switch (impl_->kind) {
    case Kind::kFiniteMap: {
      std::string out = "finite[";
      for (std::size_t i = 0; i < impl_->table.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(impl_->table[i]);
      }
      out += "]";
      if (!impl_->space.is_discrete()) out += "(metric)";
      return out;
    }
    case Kind::kRotation:
      return "rotation(" + to_string(Coord(impl_->theta)) + ")";
    case Kind::kDoubling:
      return "doubling";
    case Kind::kProduct: {
      std::string out = "product(";
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        if (i > 0) out += ", ";
        out += impl_->factors[i].describe();
      }
      return out + ")";
    }
  }
  return "?";
}

DynSystem n_fold(const DynSystem& sys, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n_fold needs N >= 1");
  return DynSystem::Product(std::vector<DynSystem>(n, sys));
}

// ---------------------------------------------------------------------------
// OpenSet

OpenSet OpenSet::Subset(std::vector<std::size_t> indices) {
  if (indices.empty()) throw std::invalid_argument("empty finite open set");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return OpenSet(Rep(std::move(indices)));
}

OpenSet OpenSet::Arcs(std::vector<Arc> arcs) {
  if (arcs.empty()) throw std::invalid_argument("empty arc union");
  for (auto& a : arcs) {
    a.from = normalize_circle(a.from);
    a.to = normalize_circle(a.to);
    if (!(arc_length(a) > 0.0)) throw std::invalid_argument("arc of zero length");
  }
  return OpenSet(Rep(std::move(arcs)));
}

OpenSet OpenSet::Balls(std::vector<Ball> balls) {
  if (balls.empty()) throw std::invalid_argument("empty ball union");
  for (const auto& b : balls) {
    if (!(b.radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  }
  return OpenSet(Rep(std::move(balls)));
}

OpenSet OpenSet::Box(std::vector<OpenSet> factors) {
  if (factors.empty()) throw std::invalid_argument("empty product box");
  return OpenSet(Rep(std::move(factors)));
}

OpenSet::Kind OpenSet::kind() const { return static_cast<Kind>(rep_.index()); }

const std::vector<std::size_t>& OpenSet::indices() const {
  return std::get<std::vector<std::size_t>>(rep_);
}
const std::vector<Arc>& OpenSet::arcs() const { return std::get<std::vector<Arc>>(rep_); }
const std::vector<Ball>& OpenSet::balls() const { return std::get<std::vector<Ball>>(rep_); }
const std::vector<OpenSet>& OpenSet::box() const {
  return std::get<std::vector<OpenSet>>(rep_);
}

std::string OpenSet::describe() const {
  std::string out;
  switch (kind()) {
    case Kind::kFiniteSubset:
      out = "{";
      for (std::size_t i = 0; i < indices().size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(indices()[i]);
      }
      return out + "}";
    case Kind::kArcUnion:
      for (std::size_t i = 0; i < arcs().size(); ++i) {
        if (i > 0) out += " u ";
        out += "arc(" + to_string(arcs()[i].from) + ", " + to_string(arcs()[i].to) + ")";
      }
      return out;
    case Kind::kBallUnion:
      for (std::size_t i = 0; i < balls().size(); ++i) {
        if (i > 0) out += " u ";
        out += "ball(" + to_string(std::span<const Coord>(balls()[i].center)) + ", " +
               to_string(Coord(balls()[i].radius)) + ")";
      }
      return out;
    case Kind::kProductBox:
      for (std::size_t i = 0; i < box().size(); ++i) {
        if (i > 0) out += " x ";
        out += box()[i].describe();
      }
      return out;
  }
  return out;
}

void validate_open(const MetricSpace& space, const OpenSet& u) {
  switch (u.kind()) {
    case OpenSet::Kind::kFiniteSubset:
      if (space.kind() != MetricSpace::Kind::kFinite) {
        throw std::invalid_argument("finite subset used on " + space.describe());
      }
      if (u.indices().back() >= space.size()) {
        throw std::out_of_range("finite subset index out of range");
      }
      return;
    case OpenSet::Kind::kArcUnion:
      if (space.kind() != MetricSpace::Kind::kCircle) {
        throw std::invalid_argument("arc union used on " + space.describe());
      }
      return;
    case OpenSet::Kind::kBallUnion:
      for (const auto& b : u.balls()) space.validate(b.center);
      return;
    case OpenSet::Kind::kProductBox: {
      if (space.kind() != MetricSpace::Kind::kProduct ||
          space.factors().size() != u.box().size()) {
        throw std::invalid_argument("product box arity does not match " + space.describe());
      }
      for (std::size_t i = 0; i < u.box().size(); ++i) {
        validate_open(space.factors()[i], u.box()[i]);
      }
      return;
    }
  }
}

bool open_contains(const MetricSpace& space, const OpenSet& u, std::span<const Coord> x) {
  switch (u.kind()) {
    case OpenSet::Kind::kFiniteSubset: {
      const std::size_t i = index_of(x[0], space.size());
      return std::binary_search(u.indices().begin(), u.indices().end(), i);
    }
    case OpenSet::Kind::kArcUnion: {
      const Coord c = normalize_circle(x[0]);
      return std::any_of(u.arcs().begin(), u.arcs().end(),
                         [&](const Arc& a) { return arc_contains(a, c); });
    }
    case OpenSet::Kind::kBallUnion:
      return std::any_of(u.balls().begin(), u.balls().end(), [&](const Ball& b) {
        return space.distance(x, b.center) < b.radius;
      });
    case OpenSet::Kind::kProductBox: {
      std::size_t offset = 0;
      for (std::size_t i = 0; i < u.box().size(); ++i) {
        const auto& f = space.factors()[i];
        if (!open_contains(f, u.box()[i], x.subspan(offset, f.dim()))) return false;
        offset += f.dim();
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// FiniteView

namespace {

void collect_radix(const MetricSpace& space, std::vector<std::size_t>& radix) {
  if (space.kind() == MetricSpace::Kind::kFinite) {
    radix.push_back(space.size());
    return;
  }
  for (const auto& f : space.factors()) collect_radix(f, radix);
}

}  // namespace

FiniteView::FiniteView(const DynSystem& sys) : sys_(sys) {
  if (!sys.space().is_finite()) {
    throw std::invalid_argument("exact machinery needs a finite space, got " +
                                sys.space().describe());
  }
  collect_radix(sys.space(), radix_);
  const std::size_t n = sys.space().cardinality();
  if (n > (std::size_t{1} << 24)) throw std::overflow_error("finite space too large");
  if (sys.kind() == DynSystem::Kind::kFiniteMap) {
    table_ = sys.table();
    cycles_ = sys.cycles();
    return;
  }
  table_.resize(n);
  for (std::size_t s = 0; s < n; ++s) table_[s] = encode(sys.apply(decode(s)));
  cycles_ = CycleStructure::Of(table_);
}

std::size_t FiniteView::encode(std::span<const Coord> x) const {
  if (x.size() != radix_.size()) throw std::invalid_argument("point dimension mismatch");
  std::size_t s = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) s = s * radix_[i] + index_of(x[i], radix_[i]);
  return s;
}

Point FiniteView::decode(std::size_t state) const {
  Point p(radix_.size());
  for (std::size_t i = radix_.size(); i-- > 0;) {
    p[i] = Coord(static_cast<double>(state % radix_[i]));
    state /= radix_[i];
  }
  return p;
}

std::vector<std::size_t> FiniteView::members(const OpenSet& u) const {
  validate_open(sys_.space(), u);
  std::vector<std::size_t> out;
  if (u.kind() == OpenSet::Kind::kFiniteSubset) return u.indices();
  for (std::size_t s = 0; s < size(); ++s) {
    if (open_contains(sys_.space(), u, decode(s))) out.push_back(s);
  }
  return out;
}

}  // namespace hyperrec

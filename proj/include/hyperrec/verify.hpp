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

#ifndef HYPERREC_VERIFY_HPP_
#define HYPERREC_VERIFY_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "hyperrec/fuzzy.hpp"

// Reference computations that share no code with the library proper beyond
// its data types. Used by the acceptance suite and the self test.
namespace hyperrec::verify {

struct Convergent {
  std::uint64_t p;
  std::uint64_t q;
  long double residual;  // |q * theta - p|
};

// Continued-fraction convergents p_k/q_k of theta in (0, 1), starting at
// q = 1, until q exceeds max_q.
std::vector<Convergent> convergents(long double theta, std::uint64_t max_q);

// Distance from n * theta to the nearest integer.
long double circle_norm(long double theta, std::uint64_t n);

inline long double golden() { return (std::sqrt(5.0L) - 1.0L) / 2.0L; }

// Hausdorff distance by the textbook double loop.
double brute_hausdorff(const MetricSpace& space, const std::vector<Point>& a,
                       const std::vector<Point>& b);

// Zadeh image computed pointwise on a finite map: sup of u over preimages.
std::vector<double> brute_zadeh_values(const DynSystem& sys, const StepFuzzySet& u);

// Skorokhod distance with the relabeled levels restricted to the lattice
// {k / lattice} together with the levels of both sets.
double brute_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v, std::size_t lattice = 200);

}  // namespace hyperrec::verify

#endif  // HYPERREC_VERIFY_HPP_

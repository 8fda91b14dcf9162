// Copyright 2026 The maxstable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Point queries. For a queried index i0 the ratios g_j = E_j(f) / Z_j(i0)
// are all >= f(i0), and g_j == f(i0) exactly when i0 attains the row maximum.
// The smallest ratio therefore recovers f(i0) with probability
//
//   1 - (1 - f(i0)^alpha / ||f||_alpha^alpha)^K,
//
// and a tie between the two smallest ratios certifies the recovery.

#ifndef MAXSTABLE_POINT_QUERY_H_
#define MAXSTABLE_POINT_QUERY_H_

#include <cstdint>

#include "maxstable/signal.h"
#include "maxstable/sketch.h"

namespace maxstable {

// Relative tolerance for declaring g_(1) and g_(2) tied. E_j / Z_j(i0) does
// not cancel bit-exactly in floating point, so exact equality is unusable.
inline constexpr double kDefaultCriterionTolerance = 1e-11;

struct PointQueryResult {
  double estimate = 0.0;         // g_(1)
  double second_smallest = 0.0;  // g_(2); equals estimate when K < 2
  bool criterion_available = false;
  bool criterion_met = false;
};

// Ties among the ratios are resolved by row index.
PointQueryResult point_estimate(
    const MaxStableSketch& s, std::uint64_t i0,
    double tolerance = kDefaultCriterionTolerance);

bool criterion(const MaxStableSketch& s, std::uint64_t i0,
               double tolerance = kDefaultCriterionTolerance);

// Exact probability that point_estimate recovers f(i0) from a width-K sketch.
// Needs the whole signal. Returns 1 for the zero signal.
double success_probability(const Signal& f, std::uint64_t i0, double alpha,
                           std::uint64_t k);

// ceil(ln(1/delta) / eps^alpha), at least 1.
std::uint64_t k_for_point(double epsilon, double delta, double alpha);

// (2^(theta/alpha) / e^(1+theta/alpha)) (1 + alpha/theta)^(1+theta/alpha) + 1
double c_theta(double theta, double alpha);

// max(3, ceil(2 C_theta ln(2/delta) / eps^(alpha+theta))).
std::uint64_t k_for_criterion(double epsilon, double delta, double theta,
                              double alpha);

}  // namespace maxstable

#endif  // MAXSTABLE_POINT_QUERY_H_

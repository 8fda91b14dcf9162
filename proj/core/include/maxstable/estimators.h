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

// Norm, distance and dominance-norm estimation from max-stable sketches.
//
// Every row E_j(f) is alpha-Frechet with scale ||f||_alpha, so
//
//   moment:  ( sum_j E_j^r / (Gamma(1 - r/alpha) K) )^(1/r),  0 < r < alpha/2
//   median:  (ln 2)^(1/alpha) * median_j E_j
//
// both estimate ||f||_alpha within (1 +- eps) w.p. 1 - delta once
// K >= C ln(1/delta) / eps^2.

#ifndef MAXSTABLE_ESTIMATORS_H_
#define MAXSTABLE_ESTIMATORS_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "maxstable/sketch.h"

namespace maxstable {

enum class EstimatorKind { kMedian, kMoment };

std::string_view to_string(EstimatorKind kind);

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::kMedian;
  // Moment order; 0 selects default_moment_order(alpha).
  double r = 0.0;
  // Permits alpha/2 <= r < alpha, where no accuracy guarantee is known.
  bool allow_heavy_r = false;

  static EstimatorSpec median() { return {}; }
  static EstimatorSpec moment(double r = 0.0) {
    return {EstimatorKind::kMoment, r, false};
  }
};

// alpha / 4, the midpoint of the guaranteed range (0, alpha/2).
constexpr double default_moment_order(double alpha) { return alpha / 4.0; }

struct NormEstimate {
  double value = 0.0;
  EstimatorKind kind = EstimatorKind::kMedian;
  double r = 0.0;  // moment order, 0 for the median estimator
  std::uint64_t k_used = 0;
};

NormEstimate norm_moment(const MaxStableSketch& s, double r,
                         bool allow_heavy_r = false);
NormEstimate norm_median(const MaxStableSketch& s);
NormEstimate estimate_norm(const MaxStableSketch& s, const EstimatorSpec& spec);

// Estimate of rho_alpha(f, g) = sum_i |f(i)^alpha - g(i)^alpha| through
// 2 ||f v g||^alpha - ||f||^alpha - ||g||^alpha. The raw value can be
// negative from sampling noise.
struct DistanceEstimate {
  double raw = 0.0;
  double clamped() const { return raw > 0.0 ? raw : 0.0; }
};

DistanceEstimate distance(const MaxStableSketch& sf, const MaxStableSketch& sg,
                          const EstimatorSpec& spec = {});

// Norm of the pointwise maximum of the sketched signals. Throws
// std::invalid_argument for an empty list, IncompatibleSketchError on config
// mismatch.
NormEstimate dominance_norm(std::span<const MaxStableSketch> sketches,
                            const EstimatorSpec& spec = {});

struct SizingParams {
  double epsilon = 0.1;
  double delta = 0.05;
  double c_constant = 1.0;

  void validate() const;
};

// ceil(C ln(1/delta) / eps^2), at least 1.
std::uint64_t k_for_norm(const SizingParams& p);

}  // namespace maxstable

#endif  // MAXSTABLE_ESTIMATORS_H_

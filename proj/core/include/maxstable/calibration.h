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

// Monte Carlo calibration of the sizing constant C in
// K >= C ln(1/delta) / eps^2, which is only known up to its existence.

#ifndef MAXSTABLE_CALIBRATION_H_
#define MAXSTABLE_CALIBRATION_H_

#include <cstddef>
#include <cstdint>

#include "maxstable/estimators.h"

namespace maxstable {

struct CalibrationOptions {
  double alpha = 1.0;
  EstimatorSpec estimator;
  double epsilon = 0.1;
  double delta = 0.05;
  std::uint64_t trials = 1000;
  // Drives both the synthetic signals and the sketch seeds.
  std::uint64_t seed = 1;
  std::size_t signal_size = 8;
  std::uint64_t max_k = 1u << 16;
};

struct CalibrationResult {
  std::uint64_t k = 0;    // smallest K with empirical coverage >= 1 - delta
  double c = 0.0;         // K eps^2 / ln(1/delta)
  double coverage = 0.0;  // empirical coverage at k
  // 95% Wilson band: C where the upper / lower confidence bound of the
  // coverage first reaches 1 - delta.
  double c_low = 0.0;
  double c_high = 0.0;
  bool reached_max_k = false;
  // Fewer than 10 / delta trials: the coverage estimate is coarse.
  bool too_few_trials = false;
};

// Throws std::invalid_argument for trials == 0 or invalid parameters.
CalibrationResult calibrate(const CalibrationOptions& options);

// Fraction of trials with |estimate / ||f|| - 1| <= eps at width k.
double empirical_coverage(const CalibrationOptions& options, std::uint64_t k);

}  // namespace maxstable

#endif  // MAXSTABLE_CALIBRATION_H_

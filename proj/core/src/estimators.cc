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

#include "maxstable/estimators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "maxstable/errors.h"

namespace maxstable {

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kMedian:
      return "median";
    case EstimatorKind::kMoment:
      return "moment";
  }
  return "unknown";
}

NormEstimate norm_moment(const MaxStableSketch& s, double r,
                         bool allow_heavy_r) {
  const double alpha = s.config().alpha;
  if (!(r > 0.0) || !(r < alpha)) {
    throw std::domain_error("norm_moment: r must satisfy 0 < r < alpha");
  }
  if (!(r < alpha / 2.0) && !allow_heavy_r) {
    throw std::invalid_argument(
        "norm_moment: r >= alpha/2 has no accuracy guarantee; pass the "
        "override to use it anyway");
  }
  double sum = 0.0;
  for (double v : s.values()) sum += std::pow(v, r);
  const double k = static_cast<double>(s.width());
  const double mean = sum / (std::tgamma(1.0 - r / alpha) * k);
  return {std::pow(mean, 1.0 / r), EstimatorKind::kMoment, r, s.width()};
}

NormEstimate norm_median(const MaxStableSketch& s) {
  std::vector<double> v(s.values().begin(), s.values().end());
  const std::size_t n = v.size();
  const std::size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double med = v[mid];
  if (n % 2 == 0) {
    const double lower = *std::max_element(v.begin(), v.begin() + mid);
    med = lower + (med - lower) / 2.0;
  }
  const double factor = std::pow(std::numbers::ln2, 1.0 / s.config().alpha);
  return {factor * med, EstimatorKind::kMedian, 0.0, s.width()};
}

NormEstimate estimate_norm(const MaxStableSketch& s,
                           const EstimatorSpec& spec) {
  if (spec.kind == EstimatorKind::kMedian) return norm_median(s);
  const double r =
      spec.r > 0.0 ? spec.r : default_moment_order(s.config().alpha);
  return norm_moment(s, r, spec.allow_heavy_r);
}

DistanceEstimate distance(const MaxStableSketch& sf, const MaxStableSketch& sg,
                          const EstimatorSpec& spec) {
  const MaxStableSketch joint = merge(sf, sg);
  const double alpha = sf.config().alpha;
  const double m = std::pow(estimate_norm(joint, spec).value, alpha);
  const double a = std::pow(estimate_norm(sf, spec).value, alpha);
  const double b = std::pow(estimate_norm(sg, spec).value, alpha);
  return {2.0 * m - a - b};
}

NormEstimate dominance_norm(std::span<const MaxStableSketch> sketches,
                            const EstimatorSpec& spec) {
  if (sketches.empty()) {
    throw std::invalid_argument("dominance_norm: no sketches");
  }
  MaxStableSketch top = sketches.front();
  for (const auto& s : sketches.subspan(1)) top.merge_in(s);
  return estimate_norm(top, spec);
}

void SizingParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("sizing: epsilon must lie in (0, 1)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("sizing: delta must lie in (0, 1)");
  }
  if (!(c_constant > 0.0) || !std::isfinite(c_constant)) {
    throw std::invalid_argument("sizing: C must be positive");
  }
}

std::uint64_t k_for_norm(const SizingParams& p) {
  p.validate();
  const double k =
      std::ceil(p.c_constant * std::log(1.0 / p.delta) / (p.epsilon * p.epsilon));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

}  // namespace maxstable

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

#include "maxstable/frechet.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maxstable {

FrechetParams::FrechetParams(double alpha, double scale)
    : alpha(alpha), scale(scale) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("frechet: alpha must be positive and finite");
  }
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument(
        "frechet: scale must be non-negative and finite");
  }
}

double cdf(double x, const FrechetParams& p) {
  if (!(x > 0.0)) return 0.0;
  return std::exp(-std::pow(p.scale / x, p.alpha));
}

double inverse_cdf(double u, double alpha) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("inverse_cdf: u must lie in (0, 1)");
  }
  const double e = -std::log(u);
  // pow(e, -1) and 1/e are both correctly rounded, so this shortcut is exact.
  if (alpha == 1.0) return 1.0 / e;
  return std::pow(e, -1.0 / alpha);
}

double moment(double p, const FrechetParams& fp) {
  if (!(p > 0.0) || !(p < fp.alpha)) {
    throw std::domain_error("moment: order must satisfy 0 < p < alpha");
  }
  return std::pow(fp.scale, p) * std::tgamma(1.0 - p / fp.alpha);
}

double median(const FrechetParams& fp) {
  if (fp.scale == 0.0) return 0.0;
  return fp.scale * std::pow(std::numbers::ln2, -1.0 / fp.alpha);
}

double ratio_cdf(double x, double alpha) {
  if (!(x > 0.0)) return 0.0;
  return 1.0 / (std::pow(x, -alpha) + 1.0);
}

}  // namespace maxstable

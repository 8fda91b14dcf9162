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

// Closed-form mathematics of the alpha-Frechet law
//
//   P{Z <= x} = exp(-sigma^alpha * x^-alpha),  x > 0,
//
// with tail index alpha > 0 and scale sigma >= 0. All functions are pure.

#ifndef MAXSTABLE_FRECHET_H_
#define MAXSTABLE_FRECHET_H_

namespace maxstable {

struct FrechetParams {
  double alpha = 1.0;
  double scale = 1.0;

  FrechetParams() = default;
  // Throws std::invalid_argument unless alpha > 0, scale >= 0, both finite.
  FrechetParams(double alpha, double scale);
};

double cdf(double x, const FrechetParams& p);

// Inverse of the standard (scale 1) CDF: (ln(1/u))^(-1/alpha).
// Throws std::domain_error for u outside the open interval (0, 1).
double inverse_cdf(double u, double alpha);

// E[Z^p] = sigma^p * Gamma(1 - p/alpha). Finite only for 0 < p < alpha;
// throws std::domain_error otherwise.
double moment(double p, const FrechetParams& fp);

// sigma * (ln 2)^(-1/alpha); 0 for the degenerate scale.
double median(const FrechetParams& fp);

// CDF of the ratio of two iid alpha-Frechet variables: 1 / (x^-alpha + 1).
// Returns 0 for x <= 0.
double ratio_cdf(double x, double alpha);

}  // namespace maxstable

#endif  // MAXSTABLE_FRECHET_H_

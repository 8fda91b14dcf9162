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

#include "maxstable/point_query.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "maxstable/oracle.h"

namespace maxstable {
namespace {

void check_unit_open(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in (0, 1)");
  }
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be positive and finite");
  }
}

}  // namespace

PointQueryResult point_estimate(const MaxStableSketch& s, std::uint64_t i0,
                                double tolerance) {
  const IndexVariates z(s.config().seed_spec(), i0);
  const auto values = s.values();
  double first = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double g = values[j] / z(j);
    if (g < first) {
      second = first;
      first = g;
    } else if (g < second) {
      second = g;
    }
  }
  PointQueryResult out;
  out.estimate = first;
  out.criterion_available = values.size() >= 2;
  out.second_smallest = out.criterion_available ? second : first;
  out.criterion_met = out.criterion_available &&
                      (second - first) <= tolerance * second;
  return out;
}

bool criterion(const MaxStableSketch& s, std::uint64_t i0, double tolerance) {
  return point_estimate(s, i0, tolerance).criterion_met;
}

double success_probability(const Signal& f, std::uint64_t i0, double alpha,
                           std::uint64_t k) {
  check_alpha(alpha);
  if (k == 0) throw std::invalid_argument("success_probability: K >= 1");
  const double total = exact_norm_pow(f, alpha);
  if (total == 0.0) return 1.0;
  const double share = std::clamp(std::pow(f.at(i0), alpha) / total, 0.0, 1.0);
  // 1 - (1 - share)^K without cancellation for small shares.
  return -std::expm1(static_cast<double>(k) * std::log1p(-share));
}

std::uint64_t k_for_point(double epsilon, double delta, double alpha) {
  check_unit_open(epsilon, "epsilon");
  check_unit_open(delta, "delta");
  check_alpha(alpha);
  const double k = std::ceil(std::log(1.0 / delta) / std::pow(epsilon, alpha));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

double c_theta(double theta, double alpha) {
  check_alpha(alpha);
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("c_theta: theta must be positive");
  }
  const double t = theta / alpha;
  return std::pow(2.0, t) / std::exp(1.0 + t) *
             std::pow(1.0 + alpha / theta, 1.0 + t) +
         1.0;
}

std::uint64_t k_for_criterion(double epsilon, double delta, double theta,
                              double alpha) {
  check_unit_open(epsilon, "epsilon");
  check_unit_open(delta, "delta");
  const double c = c_theta(theta, alpha);
  const double k = std::ceil(2.0 * c * std::log(2.0 / delta) /
                             std::pow(epsilon, alpha + theta));
  return std::max<std::uint64_t>(3, static_cast<std::uint64_t>(k));
}

}  // namespace maxstable

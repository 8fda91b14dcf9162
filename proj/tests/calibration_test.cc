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

#include "maxstable/calibration.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtest/gtest.h"

namespace maxstable {
namespace {

// Normal approximation for the median estimator: the relative standard
// deviation is 1 / (sqrt(K) alpha ln 2), so coverage 1 - delta at tolerance
// eps needs K = (z / (eps alpha ln 2))^2, i.e. C = z^2 / ((alpha ln2)^2 ln(1/delta)).
double clt_constant(double alpha, double delta, double z) {
  const double a = alpha * std::numbers::ln2;
  return z * z / (a * a * std::log(1.0 / delta));
}

TEST(CalibrationTest, RejectsZeroTrials) {
  CalibrationOptions o;
  o.trials = 0;
  EXPECT_THROW(calibrate(o), std::invalid_argument);
  EXPECT_THROW(empirical_coverage(o, 10), std::invalid_argument);
}

TEST(CalibrationTest, RejectsBadParameters) {
  CalibrationOptions o;
  o.epsilon = 1.5;
  EXPECT_THROW(calibrate(o), std::invalid_argument);
  o = {};
  o.alpha = -1.0;
  EXPECT_THROW(calibrate(o), std::invalid_argument);
}

TEST(CalibrationTest, MedianConstantIsFiniteAndReproducible) {
  CalibrationOptions o;
  o.alpha = 1.0;
  o.epsilon = 0.1;
  o.delta = 0.05;
  o.trials = 400;
  const auto a = calibrate(o);
  const auto b = calibrate(o);
  EXPECT_TRUE(std::isfinite(a.c));
  EXPECT_FALSE(a.reached_max_k);
  EXPECT_EQ(a.k, b.k);
  EXPECT_EQ(a.c, b.c);
  EXPECT_GE(a.coverage, 0.95);
  EXPECT_LE(a.c_low, a.c);
  EXPECT_LE(a.c, a.c_high);
  EXPECT_NEAR(a.c, clt_constant(1.0, 0.05, 1.959964), 0.25 * clt_constant(1.0, 0.05, 1.959964));
  EXPECT_TRUE(a.too_few_trials == false);
}

// C does not depend on eps to first order; the normal approximation behind
// the reference value only holds for small eps.
TEST(CalibrationTest, ConstantIsRoughlyFlatInEpsilon) {
  const double expected = clt_constant(1.0, 0.05, 1.959964);
  for (double eps : {0.1, 0.2, 0.3}) {
    CalibrationOptions o;
    o.epsilon = eps;
    o.trials = 400;
    const auto r = calibrate(o);
    EXPECT_NEAR(r.c, expected, 0.25 * expected) << "eps=" << eps;
  }
}

TEST(CalibrationTest, FlagsTooFewTrials) {
  CalibrationOptions o;
  o.epsilon = 0.5;
  o.delta = 0.01;
  o.trials = 50;
  EXPECT_TRUE(calibrate(o).too_few_trials);
}

TEST(CalibrationTest, ReportsUnreachableTarget) {
  CalibrationOptions o;
  o.epsilon = 0.01;
  o.trials = 50;
  o.max_k = 8;
  const auto r = calibrate(o);
  EXPECT_TRUE(r.reached_max_k);
  EXPECT_EQ(r.k, 8u);
}

TEST(CalibrationTest, CoverageGrowsWithWidth) {
  CalibrationOptions o;
  o.trials = 300;
  o.estimator = EstimatorSpec::moment();
  EXPECT_LT(empirical_coverage(o, 10), empirical_coverage(o, 1000));
}

}  // namespace
}  // namespace maxstable

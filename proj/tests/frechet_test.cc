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
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace maxstable {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

TEST(FrechetTest, CdfValues) {
  EXPECT_NEAR(cdf(1.0, {1.0, 1.0}), std::exp(-1.0), 1e-15);
  EXPECT_EQ(cdf(-3.0, {2.0, 1.5}), 0.0);
  EXPECT_EQ(cdf(0.0, {2.0, 1.5}), 0.0);
  EXPECT_NEAR(cdf(2.0, {2.0, 1.0}), 0.7788007830714049, 1e-15);
}

TEST(FrechetTest, CdfIsMonotone) {
  const FrechetParams p{0.7, 2.0};
  double prev = 0.0;
  for (double x = 0.01; x < 100.0; x *= 1.1) {
    const double c = cdf(x, p);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(FrechetTest, DegenerateScaleIsPointMassAtZero) {
  EXPECT_EQ(cdf(1e-300, {1.0, 0.0}), 1.0);
  EXPECT_EQ(cdf(0.0, {1.0, 0.0}), 0.0);
  EXPECT_EQ(median({1.0, 0.0}), 0.0);
}

TEST(FrechetTest, ParamsRejectInvalid) {
  EXPECT_THROW(FrechetParams(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(FrechetParams(-1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(FrechetParams(INFINITY, 1.0), std::invalid_argument);
  EXPECT_THROW(FrechetParams(1.0, -0.1), std::invalid_argument);
  EXPECT_THROW(FrechetParams(1.0, NAN), std::invalid_argument);
}

TEST(FrechetTest, InverseCdfValues) {
  EXPECT_NEAR(inverse_cdf(0.5, 1.0), 1.0 / std::numbers::ln2, 1e-15);
  EXPECT_NEAR(inverse_cdf(0.5, 2.0), 1.2011224087864498, 1e-15);
  for (double alpha : {0.3, 1.0, 2.0, 7.5}) {
    EXPECT_NEAR(inverse_cdf(std::exp(-1.0), alpha), 1.0, 1e-15);
  }
}

TEST(FrechetTest, InverseCdfRejectsClosedEndpoints) {
  EXPECT_THROW(inverse_cdf(0.0, 1.0), std::domain_error);
  EXPECT_THROW(inverse_cdf(1.0, 1.0), std::domain_error);
  EXPECT_THROW(inverse_cdf(-0.5, 1.0), std::domain_error);
  EXPECT_THROW(inverse_cdf(NAN, 1.0), std::domain_error);
}

TEST(FrechetTest, InverseCdfStrictlyIncreasing) {
  double prev = 0.0;
  for (double u = 0.001; u < 1.0; u += 0.001) {
    const double z = inverse_cdf(u, 1.5);
    EXPECT_GT(z, prev);
    prev = z;
  }
}

TEST(FrechetTest, RoundTripOnGrid) {
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    for (double u = 0.001; u <= 0.999; u += 0.001) {
      EXPECT_NEAR(cdf(inverse_cdf(u, alpha), {alpha, 1.0}), u, 1e-12)
          << "alpha=" << alpha << " u=" << u;
    }
  }
}

TEST(FrechetTest, ScaleAction) {
  for (double alpha : {0.5, 1.0, 3.0}) {
    for (double sigma : {0.1, 1.0, 42.0}) {
      for (double x = 0.05; x < 500.0; x *= 1.7) {
        EXPECT_NEAR(cdf(x, {alpha, sigma}), cdf(x / sigma, {alpha, 1.0}), 1e-14);
      }
    }
  }
}

TEST(FrechetTest, MomentValues) {
  EXPECT_NEAR(moment(1.0, {2.0, 1.0}), kSqrtPi, 1e-13);
  EXPECT_NEAR(moment(1.0, {2.0, 3.0}), 3.0 * kSqrtPi, 1e-13);
  EXPECT_NEAR(moment(0.5, {1.0, 1.0}), kSqrtPi, 1e-13);
}

TEST(FrechetTest, MomentRejectsInfiniteOrders) {
  EXPECT_THROW(moment(2.0, {2.0, 1.0}), std::domain_error);
  EXPECT_THROW(moment(3.0, {2.0, 1.0}), std::domain_error);
  EXPECT_THROW(moment(0.0, {2.0, 1.0}), std::domain_error);
  EXPECT_THROW(moment(-1.0, {2.0, 1.0}), std::domain_error);
}

// Reference values of Gamma at the arguments the estimators use.
TEST(FrechetTest, GammaAccuracy) {
  struct Case {
    double x, gamma;
  };
  for (const Case c : {Case{0.5, kSqrtPi}, Case{0.75, 1.2254167024651776451},
                       Case{0.25, 3.6256099082219083119},
                       Case{0.875, 1.0896523574228969513},
                       Case{1.0, 1.0}}) {
    EXPECT_NEAR(std::tgamma(c.x) / c.gamma, 1.0, 1e-13) << c.x;
  }
}

TEST(FrechetTest, MedianValues) {
  EXPECT_NEAR(median({1.0, 1.0}), 1.4426950408889634, 1e-15);
  EXPECT_NEAR(median({2.0, 1.0}), 1.2011224087864498, 1e-15);
  EXPECT_NEAR(median({1.0, 5.0}), 7.213475204444817, 1e-14);
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    EXPECT_NEAR(cdf(median({alpha, 3.0}), {alpha, 3.0}), 0.5, 1e-15);
  }
}

TEST(FrechetTest, RatioCdfValues) {
  for (double alpha : {0.5, 1.0, 3.0}) EXPECT_DOUBLE_EQ(ratio_cdf(1.0, alpha), 0.5);
  EXPECT_NEAR(ratio_cdf(2.0, 1.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(ratio_cdf(1.0 / 3.0, 2.0), 0.1, 1e-15);
  EXPECT_EQ(ratio_cdf(0.0, 1.0), 0.0);
  EXPECT_EQ(ratio_cdf(-1.0, 1.0), 0.0);
  EXPECT_LT(ratio_cdf(1e-9, 1.0), 1e-8);
  EXPECT_GT(ratio_cdf(1e9, 1.0), 1.0 - 1e-8);
}

// Sampling through inverse_cdf with an independent uniform source.
std::vector<double> sample_standard(double alpha, std::size_t n,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const double x = u(rng);
    if (x > 0.0) out.push_back(inverse_cdf(x, alpha));
  }
  return out;
}

TEST(FrechetTest, EmpiricalMomentsMatchGamma) {
  struct Case {
    double r, alpha;
  };
  for (const Case c : {Case{0.5, 2.0}, Case{1.0, 4.0}}) {
    auto z = sample_standard(c.alpha, 1'000'000, 17);
    for (double& v : z) v = std::pow(v, c.r);
    const auto m = testing::mean_and_error(z);
    EXPECT_LE(std::abs(m.mean - moment(c.r, {c.alpha, 1.0})),
              4.0 * m.standard_error)
        << "r=" << c.r << " alpha=" << c.alpha;
  }
}

TEST(FrechetTest, EmpiricalRatioLaw) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const auto a = sample_standard(alpha, 100'000, 3);
    const auto b = sample_standard(alpha, 100'000, 4);
    std::vector<double> ratio(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) ratio[n] = a[n] / b[n];
    const double d = testing::ks_statistic(
        ratio, [alpha](double x) { return ratio_cdf(x, alpha); });
    EXPECT_LT(d, testing::ks_band_99(ratio.size())) << "alpha=" << alpha;
  }
}

}  // namespace
}  // namespace maxstable

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

#include "maxstable/variate.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "maxstable/frechet.h"
#include "test_util.h"

namespace maxstable {
namespace {

TEST(VariateTest, Deterministic) {
  const SeedSpec spec{99, 1.3};
  for (std::uint64_t i : {0ull, 1ull, 1234567ull, ~0ull}) {
    EXPECT_EQ(std::bit_cast<std::uint64_t>(uniform01(spec, 5, i)),
              std::bit_cast<std::uint64_t>(uniform01(spec, 5, i)));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(frechet_variate(spec, 5, i)),
              std::bit_cast<std::uint64_t>(frechet_variate(spec, 5, i)));
  }
}

// Frozen from an independent implementation of the documented mapping.
TEST(VariateTest, RegressionVectors) {
  struct Case {
    std::uint64_t seed, j, i, word;
    double u;
  };
  const Case cases[] = {
      {1, 0, 0, 0x9875e67c797372ddULL, 0x1.30ebccf8f2e6fp-1},
      {1, 0, 1, 0x5a48ef7502d0967eULL, 0x1.6923bdd40b426p-2},
      {1, 1, 0, 0x0bc93c7166934eabULL, 0x1.79278e2cd2690p-5},
      {0, 0, 0, 0x2532a1bd6f4a675aULL, 0x1.29950deb7a534p-3},
      {123456789, 7, 9223372036854775813ULL, 0xef68e8403e6073a6ULL,
       0x1.ded1d0807cc0fp-1},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(variate_word(index_key(seed_key(c.seed), c.i), row_key(c.j)),
              c.word);
    EXPECT_EQ(uniform01({c.seed, 1.0}, c.j, c.i), c.u);
  }
  EXPECT_NE(uniform01({1, 1.0}, 0, 0), uniform01({1, 1.0}, 0, 1));
}

TEST(VariateTest, UniformStaysInsideOpenInterval) {
  EXPECT_EQ(word_to_uniform(0), kUniformMin);
  EXPECT_EQ(word_to_uniform(~0ULL), 1.0 - kUniformMin);
  EXPECT_LT(word_to_uniform(~0ULL), 1.0);
}

TEST(VariateTest, VariatesAreBoundedAndFinite) {
  for (double alpha : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double lo = inverse_cdf(kUniformMin, alpha);
    const double hi = inverse_cdf(1.0 - kUniformMin, alpha);
    EXPECT_TRUE(std::isfinite(lo));
    EXPECT_TRUE(std::isfinite(hi));
    EXPECT_NEAR(lo, std::pow(std::log(1.0 / kUniformMin), -1.0 / alpha), 1e-15);
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const double z = frechet_variate({i * 31, alpha}, i % 7, i);
      EXPECT_GE(z, lo);
      EXPECT_LE(z, hi);
    }
  }
}

TEST(VariateTest, IndexVariatesMatchesScalarPath) {
  const SeedSpec spec{42, 2.0};
  for (std::uint64_t i : {3ull, 77ull, 1ull << 40}) {
    const IndexVariates z(spec, i);
    for (std::uint64_t j = 0; j < 64; ++j) {
      EXPECT_EQ(z(j), frechet_variate(spec, j, i));
      EXPECT_EQ(z.uniform(j), uniform01(spec, j, i));
    }
  }
}

TEST(VariateTest, DifferentSeedsGiveDifferentStreams) {
  int equal = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    equal += uniform01({1, 1.0}, 0, i) == uniform01({2, 1.0}, 0, i);
  }
  EXPECT_EQ(equal, 0);
}

TEST(VariateTest, UniformMeanOverManyCells) {
  const SeedSpec spec{1, 1.0};
  double sum = 0.0;
  std::size_t n = 0;
  for (std::uint64_t j = 0; j < 1000; ++j) {
    for (std::uint64_t i = 0; i < 1000; ++i, ++n) sum += uniform01(spec, j, i);
  }
  EXPECT_NEAR(sum / static_cast<double>(n), 0.5, 0.002);
}

TEST(VariateTest, FrechetVariatesFollowTheLaw) {
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    const SeedSpec spec{2024, alpha};
    std::vector<double> z;
    z.reserve(100'000);
    for (std::uint64_t i = 0; i < 100'000; ++i) z.push_back(frechet_variate(spec, 3, i));
    const double d = testing::ks_statistic(
        z, [alpha](double x) { return cdf(x, {alpha, 1.0}); });
    EXPECT_LT(d, testing::ks_band_99(z.size())) << "alpha=" << alpha;
  }
}

std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t n = 0; n < order.size(); ++n) r[order[n]] = static_cast<double>(n);
  return r;
}

TEST(VariateTest, RowsAreRankUncorrelated) {
  const SeedSpec spec{5, 1.0};
  constexpr std::size_t kN = 100'000;
  for (std::uint64_t other_row : {1ull, 2ull, 1000ull}) {
    std::vector<double> a(kN), b(kN);
    for (std::size_t i = 0; i < kN; ++i) {
      a[i] = frechet_variate(spec, 0, i);
      b[i] = frechet_variate(spec, other_row, i);
    }
    const auto ra = ranks(a);
    const auto rb = ranks(b);
    const double mean = (kN - 1) / 2.0;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < kN; ++i) {
      sab += (ra[i] - mean) * (rb[i] - mean);
      saa += (ra[i] - mean) * (ra[i] - mean);
      sbb += (rb[i] - mean) * (rb[i] - mean);
    }
    EXPECT_LT(std::abs(sab / std::sqrt(saa * sbb)), 0.01) << other_row;
  }
}

TEST(VariateTest, AdjacentIndicesAreRankUncorrelated) {
  const SeedSpec spec{5, 1.0};
  constexpr std::size_t kN = 100'000;
  std::vector<double> a(kN), b(kN);
  for (std::size_t i = 0; i < kN; ++i) {
    a[i] = uniform01(spec, 0, 2 * i);
    b[i] = uniform01(spec, 0, 2 * i + 1);
  }
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  const double mean = (kN - 1) / 2.0;
  double sab = 0, saa = 0;
  for (std::size_t i = 0; i < kN; ++i) {
    sab += (ra[i] - mean) * (rb[i] - mean);
    saa += (ra[i] - mean) * (ra[i] - mean);
  }
  EXPECT_LT(std::abs(sab / saa), 0.01);
}

}  // namespace
}  // namespace maxstable

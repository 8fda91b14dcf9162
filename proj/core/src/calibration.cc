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
#include <map>
#include <random>
#include <stdexcept>

#include "maxstable/oracle.h"

namespace maxstable {
namespace {

constexpr double kWilsonZ = 1.959963984540054;

struct Wilson {
  double low;
  double high;
};

Wilson wilson_interval(double hits, double n) {
  const double p = hits / n;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half =
      kWilsonZ * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {centre - half, centre + half};
}

// Values spread over e^-3 .. e^3 at distinct random indices. Built from raw
// engine words so the stream does not depend on the standard library's
// distribution implementations.
Signal synthetic_signal(std::uint64_t seed, std::uint64_t trial,
                        std::size_t size) {
  std::mt19937_64 rng(mix64(seed ^ mix64(trial + 0x51ed27)));
  Signal f;
  while (f.support_size() < size) {
    const std::uint64_t index = rng();
    const double u = word_to_uniform(rng());
    f.set(index, std::exp(6.0 * (u - 0.5)));
  }
  return f;
}

void validate(const CalibrationOptions& o) {
  if (o.trials == 0) throw std::invalid_argument("calibrate: trials must be > 0");
  if (!(o.alpha > 0.0) || !std::isfinite(o.alpha)) {
    throw std::invalid_argument("calibrate: alpha must be positive");
  }
  if (o.signal_size == 0) {
    throw std::invalid_argument("calibrate: signal size must be > 0");
  }
  if (o.max_k == 0) throw std::invalid_argument("calibrate: max K must be > 0");
  SizingParams{o.epsilon, o.delta, 1.0}.validate();
}

}  // namespace

double empirical_coverage(const CalibrationOptions& o, std::uint64_t k) {
  validate(o);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const Signal f = synthetic_signal(o.seed, t, o.signal_size);
    const SketchConfig cfg{o.alpha, k, mix64(o.seed + 0x9e37 * (t + 1))};
    const auto s = MaxStableSketch::from_signal(f, cfg);
    const double ratio =
        estimate_norm(s, o.estimator).value / exact_norm(f, o.alpha);
    if (std::abs(ratio - 1.0) <= o.epsilon) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(o.trials);
}

CalibrationResult calibrate(const CalibrationOptions& o) {
  validate(o);
  const double target = 1.0 - o.delta;
  const double n = static_cast<double>(o.trials);
  std::map<std::uint64_t, double> cache;
  auto coverage = [&](std::uint64_t k) {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, empirical_coverage(o, k)).first;
    return it->second;
  };

  // Smallest K in [1, max_k] satisfying pred, assuming coverage grows with K:
  // doubling to bracket, then bisection. Returns max_k + 1 if none does.
  auto first_k = [&](auto pred) -> std::uint64_t {
    std::uint64_t hi = 1;
    while (!pred(coverage(hi))) {
      if (hi >= o.max_k) return o.max_k + 1;
      hi = std::min(hi * 2, o.max_k);
    }
    std::uint64_t lo = hi / 2;  // pred(lo) false, or lo == 0
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (pred(coverage(mid))) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  };

  const double scale = o.epsilon * o.epsilon / std::log(1.0 / o.delta);
  auto to_c = [&](std::uint64_t k) { return static_cast<double>(k) * scale; };

  CalibrationResult out;
  out.too_few_trials = n < 10.0 / o.delta;

  std::uint64_t k = first_k([&](double c) { return c >= target; });
  if (k > o.max_k) {
    out.reached_max_k = true;
    k = o.max_k;
  }
  out.k = k;
  out.c = to_c(k);
  out.coverage = coverage(k);

  const std::uint64_t k_low = first_k(
      [&](double c) { return wilson_interval(c * n, n).high >= target; });
  const std::uint64_t k_high = first_k(
      [&](double c) { return wilson_interval(c * n, n).low >= target; });
  out.c_low = to_c(std::min(k_low, o.max_k));
  out.c_high = to_c(std::min(k_high, o.max_k));
  return out;
}

}  // namespace maxstable

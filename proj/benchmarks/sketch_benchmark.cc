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

#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "maxstable/estimators.h"
#include "maxstable/point_query.h"
#include "maxstable/sketch.h"
#include "maxstable/variate.h"

namespace maxstable {
namespace {

void BM_FrechetVariate(benchmark::State& state) {
  const SeedSpec spec{7, static_cast<double>(state.range(0)) / 2.0};
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(frechet_variate(spec, i & 1023, i));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FrechetVariate)->Arg(1)->Arg(2)->Arg(4);

// One stream item touches all K rows.
void BM_Update(benchmark::State& state) {
  MaxStableSketch s({1.0, static_cast<std::uint64_t>(state.range(0)), 3});
  std::mt19937_64 rng(1);
  for (auto _ : state) s.update(rng(), 1.0 + (rng() & 1023));
  state.SetItemsProcessed(state.iterations());
  state.counters["rows/s"] = benchmark::Counter(
      static_cast<double>(state.iterations() * state.range(0)), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Update)->Arg(64)->Arg(1000)->Arg(4000);

MaxStableSketch filled(std::uint64_t k, std::uint64_t seed, int items) {
  MaxStableSketch s({1.0, k, 3});
  std::mt19937_64 rng(seed);
  for (int n = 0; n < items; ++n) s.update(rng() % 100000, 1.0 + (rng() & 1023));
  return s;
}

void BM_Merge(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  MaxStableSketch a = filled(k, 1, 200);
  const MaxStableSketch b = filled(k, 2, 200);
  for (auto _ : state) {
    a.merge_in(b);
    benchmark::DoNotOptimize(a.values().data());
  }
  state.SetBytesProcessed(state.iterations() * k * sizeof(double));
}
BENCHMARK(BM_Merge)->Arg(1000)->Arg(65536);

void BM_PointQuery(benchmark::State& state) {
  const MaxStableSketch s = filled(static_cast<std::uint64_t>(state.range(0)), 1, 200);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(point_estimate(s, i++ % 100000));
}
BENCHMARK(BM_PointQuery)->Arg(47)->Arg(1000);

void BM_NormMedian(benchmark::State& state) {
  const MaxStableSketch s = filled(static_cast<std::uint64_t>(state.range(0)), 1, 200);
  for (auto _ : state) benchmark::DoNotOptimize(norm_median(s));
}
BENCHMARK(BM_NormMedian)->Arg(1000)->Arg(4000);

void BM_NormMoment(benchmark::State& state) {
  const MaxStableSketch s = filled(static_cast<std::uint64_t>(state.range(0)), 1, 200);
  for (auto _ : state) benchmark::DoNotOptimize(norm_moment(s, 0.25));
}
BENCHMARK(BM_NormMoment)->Arg(1000)->Arg(4000);

void BM_Serialize(benchmark::State& state) {
  const MaxStableSketch s = filled(static_cast<std::uint64_t>(state.range(0)), 1, 200);
  for (auto _ : state) benchmark::DoNotOptimize(deserialize(serialize(s)));
  state.SetBytesProcessed(state.iterations() * state.range(0) * sizeof(double));
}
BENCHMARK(BM_Serialize)->Arg(1000);

}  // namespace
}  // namespace maxstable

BENCHMARK_MAIN();

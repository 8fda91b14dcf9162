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

// Deterministic generation of the variates Z_j(i).
//
// Any holder of (master_seed, alpha) can regenerate Z_j(i) on demand in O(1).
// The mapping is
//
//   seed_key  = mix64(master_seed ^ 0x243f6a8885a308d3)
//   index_key = mix64(seed_key + i * 0x9e3779b97f4a7c15)
//   row_key   = mix64((j + 1) * 0xd1b54a32d192ed03)
//   word      = mix64(mix64(index_key ^ row_key))
//   u         = ((word >> 12) + 0.5) * 2^-52           in [2^-53, 1 - 2^-53]
//   Z_j(i)    = inverse_cdf(u, alpha)
//
// where mix64 is the splitmix64 finalizer. Only 64-bit integer arithmetic is
// involved, so the words are identical on every platform. Changing any of
// this requires bumping kVariateMappingVersion and the sketch format version.

#ifndef MAXSTABLE_VARIATE_H_
#define MAXSTABLE_VARIATE_H_

#include <bit>
#include <cstdint>

namespace maxstable {

inline constexpr std::uint8_t kVariateMappingVersion = 1;

// Smallest uniform the mapping can produce; the largest is 1 - kUniformMin.
inline constexpr double kUniformMin = 0x1p-53;

struct SeedSpec {
  std::uint64_t master_seed = 0;
  double alpha = 1.0;

  friend bool operator==(const SeedSpec& a, const SeedSpec& b) {
    return a.master_seed == b.master_seed &&
           std::bit_cast<std::uint64_t>(a.alpha) ==
               std::bit_cast<std::uint64_t>(b.alpha);
  }
};

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t seed_key(std::uint64_t master_seed) {
  return mix64(master_seed ^ 0x243f6a8885a308d3ULL);
}

constexpr std::uint64_t index_key(std::uint64_t seed_key, std::uint64_t i) {
  return mix64(seed_key + i * 0x9e3779b97f4a7c15ULL);
}

constexpr std::uint64_t row_key(std::uint64_t j) {
  return mix64((j + 1) * 0xd1b54a32d192ed03ULL);
}

constexpr std::uint64_t variate_word(std::uint64_t index_key,
                                     std::uint64_t row_key) {
  return mix64(mix64(index_key ^ row_key));
}

constexpr double word_to_uniform(std::uint64_t word) {
  return (static_cast<double>(word >> 12) + 0.5) * 0x1p-52;
}

double uniform01(const SeedSpec& spec, std::uint64_t j, std::uint64_t i);

double frechet_variate(const SeedSpec& spec, std::uint64_t j, std::uint64_t i);

// Hot-path helper: the variates Z_0(i), Z_1(i), ... for one index i.
class IndexVariates {
 public:
  IndexVariates(const SeedSpec& spec, std::uint64_t i)
      : alpha_(spec.alpha),
        index_key_(index_key(seed_key(spec.master_seed), i)) {}

  double uniform(std::uint64_t j) const {
    return word_to_uniform(variate_word(index_key_, row_key(j)));
  }
  double operator()(std::uint64_t j) const;

 private:
  double alpha_;
  std::uint64_t index_key_;
};

}  // namespace maxstable

#endif  // MAXSTABLE_VARIATE_H_

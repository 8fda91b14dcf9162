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

// The max-stable sketch E_j(f) = max_i f(i) * Z_j(i), j = 0..K-1.
//
// Sketches are max-linear: E_j(a f v b g) = a E_j(f) v b E_j(g). Merging is a
// component-wise maximum, exact, commutative, associative and idempotent, so
// per-worker sketches can be combined in any order and re-delivered items are
// harmless. Only positive-valued updates change the state.

#ifndef MAXSTABLE_SKETCH_H_
#define MAXSTABLE_SKETCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxstable/signal.h"
#include "maxstable/variate.h"

namespace maxstable {

inline constexpr std::uint8_t kSketchFormatVersion = 1;

// Identity of a sketch family. Two sketches can be merged or compared only
// when their configs are equal (alpha compared bit-wise).
struct SketchConfig {
  double alpha = 1.0;
  std::uint64_t k = 1;
  std::uint64_t master_seed = 0;
  std::uint8_t format_version = kSketchFormatVersion;

  SeedSpec seed_spec() const { return {master_seed, alpha}; }

  // Throws std::invalid_argument for k == 0, alpha not in (0, inf), or an
  // unsupported format version.
  void validate() const;

  friend bool operator==(const SketchConfig& a, const SketchConfig& b) {
    return a.seed_spec() == b.seed_spec() && a.k == b.k &&
           a.format_version == b.format_version;
  }
};

class MaxStableSketch {
 public:
  // The sketch of the zero signal: all K rows are 0.
  explicit MaxStableSketch(const SketchConfig& config);

  static MaxStableSketch from_signal(const Signal& f,
                                     const SketchConfig& config);

  // values[j] := max(values[j], v * Z_j(i)). O(K). Throws
  // std::invalid_argument for negative or non-finite v, and
  // std::overflow_error (leaving the sketch untouched) when v is so large
  // that v * Z could overflow.
  void update(std::uint64_t index, double value);
  void update(const StreamItem& item) { update(item.index, item.value); }

  // In-place component-wise maximum. Throws IncompatibleSketchError when the
  // configs differ.
  void merge_in(const MaxStableSketch& other);

  const SketchConfig& config() const { return config_; }
  std::span<const double> values() const { return values_; }
  std::uint64_t width() const { return config_.k; }
  bool is_zero() const;

  // Bit-exact equality of config and every row.
  friend bool operator==(const MaxStableSketch& a, const MaxStableSketch& b);

 private:
  friend MaxStableSketch deserialize(std::string_view bytes);
  friend MaxStableSketch scale(const MaxStableSketch& s, double a);

  SketchConfig config_;
  std::vector<double> values_;
  double max_update_value_ = 0.0;
};

MaxStableSketch merge(const MaxStableSketch& a, const MaxStableSketch& b);

// values[j] := a * values[j]; the sketch of a * f up to rounding.
MaxStableSketch scale(const MaxStableSketch& s, double a);

// Binary layout, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "MSSK"
//   4       1     format version (1)
//   5       8     alpha, IEEE-754 binary64 bits
//   13      8     K
//   21      8     master seed
//   29      8*K   rows, IEEE-754 binary64 bits
std::string serialize(const MaxStableSketch& s);

// Throws FormatError on bad magic, truncation, trailing bytes, invalid
// config, or rows that are negative, NaN or infinite, and
// UnsupportedVersionError for an unknown version byte.
MaxStableSketch deserialize(std::string_view bytes);

inline constexpr std::size_t kSketchHeaderSize = 29;

}  // namespace maxstable

#endif  // MAXSTABLE_SKETCH_H_

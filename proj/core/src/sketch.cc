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

#include "maxstable/sketch.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "maxstable/errors.h"
#include "maxstable/frechet.h"

namespace maxstable {
namespace {

constexpr char kMagic[4] = {'M', 'S', 'S', 'K'};

void put_u64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) {
    out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }
}

std::uint64_t get_u64(std::string_view in, std::size_t offset) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[offset + b]))
         << (8 * b);
  }
  return v;
}

void require_compatible(const SketchConfig& a, const SketchConfig& b) {
  if (!(a == b)) {
    throw IncompatibleSketchError(
        "sketches belong to different families (alpha, K, seed or version "
        "differ)");
  }
}

}  // namespace

void SketchConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("sketch: alpha must be positive and finite");
  }
  if (k == 0) throw std::invalid_argument("sketch: K must be at least 1");
  if (format_version != kSketchFormatVersion) {
    throw std::invalid_argument("sketch: unsupported format version");
  }
}

MaxStableSketch::MaxStableSketch(const SketchConfig& config)
    : config_(config) {
  config_.validate();
  values_.assign(config_.k, 0.0);
  max_update_value_ = std::numeric_limits<double>::max() /
                      inverse_cdf(1.0 - kUniformMin, config_.alpha);
}

MaxStableSketch MaxStableSketch::from_signal(const Signal& f,
                                             const SketchConfig& config) {
  MaxStableSketch s(config);
  for (const auto& [i, v] : f) s.update(i, v);
  return s;
}

void MaxStableSketch::update(std::uint64_t index, double value) {
  check_signal_value(value);
  if (value == 0.0) return;
  if (value > max_update_value_) {
    throw std::overflow_error("sketch: update value overflows the row range");
  }
  const IndexVariates z(config_.seed_spec(), index);
  const std::size_t k = values_.size();
  for (std::size_t j = 0; j < k; ++j) {
    const double c = value * z(j);
    if (c > values_[j]) values_[j] = c;
  }
}

void MaxStableSketch::merge_in(const MaxStableSketch& other) {
  require_compatible(config_, other.config_);
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (other.values_[j] > values_[j]) values_[j] = other.values_[j];
  }
}

bool MaxStableSketch::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v == 0.0; });
}

bool operator==(const MaxStableSketch& a, const MaxStableSketch& b) {
  return a.config_ == b.config_ && a.values_.size() == b.values_.size() &&
         std::memcmp(a.values_.data(), b.values_.data(),
                     a.values_.size() * sizeof(double)) == 0;
}

MaxStableSketch merge(const MaxStableSketch& a, const MaxStableSketch& b) {
  MaxStableSketch out = a;
  out.merge_in(b);
  return out;
}

MaxStableSketch scale(const MaxStableSketch& s, double a) {
  if (!std::isfinite(a) || a < 0.0) {
    throw std::invalid_argument("scale: factor must be finite and >= 0");
  }
  MaxStableSketch out = s;
  for (double& v : out.values_) {
    v *= a;
    if (!std::isfinite(v)) {
      throw std::overflow_error("scale: result overflows the row range");
    }
  }
  return out;
}

std::string serialize(const MaxStableSketch& s) {
  const auto& cfg = s.config();
  std::string out;
  out.reserve(kSketchHeaderSize + 8 * s.values().size());
  out.append(kMagic, sizeof(kMagic));
  out.push_back(static_cast<char>(cfg.format_version));
  put_u64(out, std::bit_cast<std::uint64_t>(cfg.alpha));
  put_u64(out, cfg.k);
  put_u64(out, cfg.master_seed);
  for (double v : s.values()) put_u64(out, std::bit_cast<std::uint64_t>(v));
  return out;
}

MaxStableSketch deserialize(std::string_view bytes) {
  if (bytes.size() < 5) throw FormatError("sketch: truncated header");
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("sketch: bad magic (expected \"MSSK\")");
  }
  const auto version = static_cast<std::uint8_t>(bytes[4]);
  if (version != kSketchFormatVersion) {
    throw UnsupportedVersionError("sketch: unsupported version " +
                                  std::to_string(version));
  }
  if (bytes.size() < kSketchHeaderSize) {
    throw FormatError("sketch: truncated header");
  }
  SketchConfig cfg;
  cfg.format_version = version;
  cfg.alpha = std::bit_cast<double>(get_u64(bytes, 5));
  cfg.k = get_u64(bytes, 13);
  cfg.master_seed = get_u64(bytes, 21);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const std::size_t payload = bytes.size() - kSketchHeaderSize;
  if (payload % 8 != 0 || payload / 8 != cfg.k) {
    throw FormatError("sketch: payload size does not match K = " +
                      std::to_string(cfg.k));
  }
  MaxStableSketch s(cfg);
  for (std::size_t j = 0; j < cfg.k; ++j) {
    const double v =
        std::bit_cast<double>(get_u64(bytes, kSketchHeaderSize + 8 * j));
    if (!std::isfinite(v) || v < 0.0 || std::signbit(v)) {
      throw FormatError("sketch: row " + std::to_string(j) +
                        " is not a finite non-negative value");
    }
    s.values_[j] = v;
  }
  return s;
}

}  // namespace maxstable

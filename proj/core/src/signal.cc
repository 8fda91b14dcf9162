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

#include "maxstable/signal.h"

#include <cmath>
#include <stdexcept>

namespace maxstable {

void check_signal_value(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(
        "signal values must be finite and non-negative");
  }
}

void Signal::set(std::uint64_t i, double v) {
  check_signal_value(v);
  if (v == 0.0) {
    entries_.erase(i);
  } else {
    entries_[i] = v;
  }
}

void Signal::raise(std::uint64_t i, double v) {
  check_signal_value(v);
  if (v == 0.0) return;
  auto [it, inserted] = entries_.try_emplace(i, v);
  if (!inserted && v > it->second) it->second = v;
}

double Signal::at(std::uint64_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? 0.0 : it->second;
}

Signal Signal::scaled(double a) const {
  check_signal_value(a);
  Signal out;
  for (const auto& [i, v] : entries_) out.set(i, a * v);
  return out;
}

Signal Signal::from_items(std::span<const StreamItem> items) {
  Signal out;
  for (const auto& item : items) out.raise(item.index, item.value);
  return out;
}

}  // namespace maxstable

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

#ifndef MAXSTABLE_SIGNAL_H_
#define MAXSTABLE_SIGNAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

namespace maxstable {

// One arrival (i, v) in either the aggregate or the max-cash-register model.
struct StreamItem {
  std::uint64_t index = 0;
  double value = 0.0;
};

// Throws std::invalid_argument unless v is finite and non-negative.
void check_signal_value(double v);

// A sparse non-negative signal f over the 64-bit index universe. Zero entries
// are not stored. This is the in-memory reference representation used by
// tests and the oracle; sketches never need it.
class Signal {
 public:
  using Map = std::map<std::uint64_t, double>;

  Signal() = default;

  // Aggregate semantics: later writes replace earlier ones. Setting 0 erases.
  void set(std::uint64_t i, double v);
  // Max-cash-register semantics: f(i) := max(f(i), v).
  void raise(std::uint64_t i, double v);

  double at(std::uint64_t i) const;
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  // a * f for a >= 0.
  Signal scaled(double a) const;

  static Signal from_items(std::span<const StreamItem> items);

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  Map entries_;
};

}  // namespace maxstable

#endif  // MAXSTABLE_SIGNAL_H_

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

// The maxsketch command line: build, merge, estimate, distance, point, size
// and calibrate. Everything is reachable in-process through run() so tests
// can drive the exact code path of the binary.

#ifndef MAXSTABLE_TOOLS_CLI_COMMANDS_H_
#define MAXSTABLE_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "maxstable/sketch.h"

namespace maxstable::cli {

inline constexpr const char* kSeedEnvVar = "MAXSKETCH_SEED";

// Bounded duplicate-index detector: exact for the first kTrackedIndices
// distinct indices, silent afterwards so memory stays O(1).
class DuplicateTracker {
 public:
  static constexpr std::size_t kTrackedIndices = 1 << 16;

  void observe(std::uint64_t index);
  std::uint64_t repeats() const { return repeats_; }
  bool saturated() const { return saturated_; }

 private:
  std::vector<std::uint64_t> seen_;  // open addressing, 0 marks empty
  bool seen_zero_ = false;
  std::size_t size_ = 0;
  std::uint64_t repeats_ = 0;
  bool saturated_ = false;
};

struct BuildStats {
  std::uint64_t items = 0;
  std::uint64_t lines = 0;
  std::uint64_t repeated_indices = 0;
  bool duplicate_tracking_saturated = false;
};

// Streams `in` into a sketch using `workers` threads (1 = no threads). Memory
// is O(workers * K) plus a fixed batch buffer. Throws ParseError.
MaxStableSketch build_sketch(std::istream& in, const SketchConfig& config,
                             unsigned workers, BuildStats* stats = nullptr);

MaxStableSketch read_sketch_file(const std::string& path);
void write_sketch_file(const std::string& path, const MaxStableSketch& s);

// Shortest round-trip decimal form.
std::string format_double(double v);

// argv-style entry point; args[0] is the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace maxstable::cli

#endif  // MAXSTABLE_TOOLS_CLI_COMMANDS_H_

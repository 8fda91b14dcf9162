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

// Stream record decoding for the CLI.
//
// Two encodings, chosen by the first non-blank line of the input:
//
//   text:         "<index><TAB or ,><value>"   ('#' starts a comment line)
//   JSON lines:   {"i": <index>, "v": <value>}
//
// Indices are unsigned 64-bit decimals; values must be finite and >= 0.

#ifndef MAXSTABLE_TOOLS_CLI_STREAM_READER_H_
#define MAXSTABLE_TOOLS_CLI_STREAM_READER_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "maxstable/signal.h"

namespace maxstable::cli {

enum class StreamFormat { kUnknown, kText, kJsonLines };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

// Both throw std::invalid_argument with a short reason.
StreamItem parse_text_record(std::string_view line);
StreamItem parse_json_record(std::string_view line);

class StreamReader {
 public:
  explicit StreamReader(std::istream& in) : in_(in) {}

  // Next record, or nullopt at end of input. Throws ParseError.
  std::optional<StreamItem> next();

  std::uint64_t line_number() const { return line_number_; }
  StreamFormat format() const { return format_; }

 private:
  std::istream& in_;
  std::string line_;
  std::uint64_t line_number_ = 0;
  StreamFormat format_ = StreamFormat::kUnknown;
};

}  // namespace maxstable::cli

#endif  // MAXSTABLE_TOOLS_CLI_STREAM_READER_H_

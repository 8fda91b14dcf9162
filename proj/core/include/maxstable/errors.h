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

#ifndef MAXSTABLE_ERRORS_H_
#define MAXSTABLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace maxstable {

// Raised when two sketches from different families (alpha, width, seed or
// format version differ) are combined.
class IncompatibleSketchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a serialized sketch cannot be decoded.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedVersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace maxstable

#endif  // MAXSTABLE_ERRORS_H_

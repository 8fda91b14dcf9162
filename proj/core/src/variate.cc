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

#include "maxstable/variate.h"

#include "maxstable/frechet.h"

namespace maxstable {

double uniform01(const SeedSpec& spec, std::uint64_t j, std::uint64_t i) {
  return word_to_uniform(
      variate_word(index_key(seed_key(spec.master_seed), i), row_key(j)));
}

double frechet_variate(const SeedSpec& spec, std::uint64_t j,
                       std::uint64_t i) {
  return inverse_cdf(uniform01(spec, j, i), spec.alpha);
}

double IndexVariates::operator()(std::uint64_t j) const {
  return inverse_cdf(uniform(j), alpha_);
}

}  // namespace maxstable

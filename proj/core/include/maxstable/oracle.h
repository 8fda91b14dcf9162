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

// Brute-force reference values on in-memory signals. Intended for tests and
// calibration; signals of more than ~1e7 entries are not a supported use.

#ifndef MAXSTABLE_ORACLE_H_
#define MAXSTABLE_ORACLE_H_

#include <span>

#include "maxstable/signal.h"

namespace maxstable {

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// sum_i f(i)^alpha
double exact_norm_pow(const Signal& f, double alpha);
// (sum_i f(i)^alpha)^(1/alpha)
double exact_norm(const Signal& f, double alpha);
// sum_i |f(i)^alpha - g(i)^alpha| over the union of supports.
double exact_rho(const Signal& f, const Signal& g, double alpha);

Signal pointwise_max(const Signal& f, const Signal& g);
// || max_r f_r ||_alpha. Throws std::invalid_argument for an empty list.
double exact_dominance(std::span<const Signal> signals, double alpha);

}  // namespace maxstable

#endif  // MAXSTABLE_ORACLE_H_

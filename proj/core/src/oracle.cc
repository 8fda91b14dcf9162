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

#include "maxstable/oracle.h"

#include <cmath>
#include <stdexcept>

namespace maxstable {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double exact_norm_pow(const Signal& f, double alpha) {
  CompensatedSum sum;
  for (const auto& [i, v] : f) sum.add(std::pow(v, alpha));
  return sum.value();
}

double exact_norm(const Signal& f, double alpha) {
  return std::pow(exact_norm_pow(f, alpha), 1.0 / alpha);
}

double exact_rho(const Signal& f, const Signal& g, double alpha) {
  CompensatedSum sum;
  // Merge-walk the two sorted supports.
  auto a = f.begin();
  auto b = g.begin();
  while (a != f.end() || b != g.end()) {
    double fv = 0.0;
    double gv = 0.0;
    if (b == g.end() || (a != f.end() && a->first < b->first)) {
      fv = (a++)->second;
    } else if (a == f.end() || b->first < a->first) {
      gv = (b++)->second;
    } else {
      fv = (a++)->second;
      gv = (b++)->second;
    }
    sum.add(std::abs(std::pow(fv, alpha) - std::pow(gv, alpha)));
  }
  return sum.value();
}

Signal pointwise_max(const Signal& f, const Signal& g) {
  Signal out = f;
  for (const auto& [i, v] : g) out.raise(i, v);
  return out;
}

double exact_dominance(std::span<const Signal> signals, double alpha) {
  if (signals.empty()) {
    throw std::invalid_argument("exact_dominance: no signals");
  }
  Signal top;
  for (const auto& f : signals) top = pointwise_max(top, f);
  return exact_norm(top, alpha);
}

}  // namespace maxstable

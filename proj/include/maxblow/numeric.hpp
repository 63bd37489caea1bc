/*
 * Copyright 2026 The Maxblow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MAXBLOW_NUMERIC_HPP
#define MAXBLOW_NUMERIC_HPP

#include <cmath>
#include <string>

namespace maxblow {

// Neumaier-compensated accumulator. Sequential: the state after adding a
// prefix of a sequence equals the state of summing that prefix from scratch,
// which is what makes incremental ball sums reproducible by re-evaluation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Fixed-width numeric formatting used by all text interfaces
// (12 significant digits; full precision for round-trip files).
std::string fmt_g12(double v);
std::string fmt_full(double v);

}  // namespace maxblow

#endif  // MAXBLOW_NUMERIC_HPP

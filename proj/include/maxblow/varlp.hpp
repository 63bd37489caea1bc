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

#ifndef MAXBLOW_VARLP_HPP
#define MAXBLOW_VARLP_HPP

#include <limits>
#include <string>
#include <vector>

#include "maxblow/space.hpp"

namespace maxblow {

// Nonnegative per-point values; only magnitudes enter any formula here.
using PointFunction = std::vector<double>;

// Per-point exponent in [1, inf], infinity represented by the usual IEEE
// infinity. Values arbitrarily close to 1 are kept verbatim.
class ExponentFunction {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  explicit ExponentFunction(std::vector<double> values);
  static ExponentFunction constant(int n, double p);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  bool has_infinite_part() const { return has_infinite_; }

 private:
  std::vector<double> values_;
  bool has_infinite_ = false;
};

struct NormResult {
  double value = 0.0;
  int iterations = 0;
  double lo = 0.0;
  double hi = 0.0;
};

double essential_infimum(const ExponentFunction& p, const Space& space);

// sum_{p(x)<inf} w(x) f(x)^p(x) + max_{p(x)=inf} f(x)
double modular(const Space& space, const ExponentFunction& p,
               const PointFunction& f);

// Luxemburg-Nakano norm inf{lambda > 0 : modular(f/lambda) <= 1} by
// bracketing plus bisection on the nonincreasing map lambda -> modular.
// Returned value is the certified upper bracket end.
NormResult luxemburg_norm(const Space& space, const ExponentFunction& p,
                          const PointFunction& f, double tol);

// Closed-form constant-exponent norm; the oracle for the bisection path.
double constant_p_norm(const Space& space, double p_const,
                       const PointFunction& f);

ExponentFunction load_exponent_csv(const std::string& path, int n);
PointFunction load_function_csv(const std::string& path, int n);
void save_function_csv(const PointFunction& f, const std::string& path);

std::string format_norm_result(const NormResult& r);

}  // namespace maxblow

#endif  // MAXBLOW_VARLP_HPP

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

#ifndef MAXBLOW_MAXIMAL_HPP
#define MAXBLOW_MAXIMAL_HPP

#include <iosfwd>

#include "maxblow/space.hpp"
#include "maxblow/varlp.hpp"

namespace maxblow {

struct ArgmaxBall {
  int center = -1;
  double threshold = 0.0;
};

struct MaximalResult {
  std::vector<double> values;     // Mf, exact over all balls
  std::vector<ArgmaxBall> argmax; // first attaining ball in (center, threshold) order
};

// Weighted average of f over members, accumulated in the order given.
// Family entries and decomposition balls come in ball growth order, so
// re-evaluation reproduces kernel-computed averages bit for bit.
double ball_average(const Space& space, const std::vector<int>& members,
                    const PointFunction& f);

// OpenMP-parallel kernel: per center, distances sorted once, prefix-averaged,
// suffix-maximized. Bit-identical to the serial reference for any thread
// count.
MaximalResult maximal_function(const Space& space, const PointFunction& f);

// Serial reference: direct enumeration of every distinct ball (all centers x
// all thresholds x all points), each average summed from scratch. O(n^3);
// kept as the ground truth the kernels are tested against.
MaximalResult maximal_function_serial(const Space& space,
                                      const PointFunction& f);

// Interval fast path for 1-d coordinate-ordered spaces: two-pointer ball
// growth and prefix sums over the coordinate order, O(n^2) total.
// Identical values to maximal_function.
MaximalResult maximal_function_interval(const Space& space,
                                        const PointFunction& f);

void write_maximal_csv(std::ostream& out, const PointFunction& f,
                       const MaximalResult& result);

}  // namespace maxblow

#endif  // MAXBLOW_MAXIMAL_HPP

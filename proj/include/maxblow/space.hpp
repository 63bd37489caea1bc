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

#ifndef MAXBLOW_SPACE_HPP
#define MAXBLOW_SPACE_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "maxblow/errors.hpp"

namespace maxblow {

enum class Metric { kL2, kLinf, kCircle };

// Finite quasi-metric measure space: dense point ids 0..n-1, one strictly
// positive weight per point, and either an explicit n x n distance table or
// per-point coordinates with a metric tag (distances computed on demand, so
// large generated spaces never materialize the table).
class Space {
 public:
  static Space from_table(std::vector<double> weights,
                          std::vector<double> table);
  static Space from_coords(std::vector<double> weights,
                           std::vector<double> coords, int dim, Metric metric);

  int size() const { return n_; }
  double weight(int i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  double total_measure() const { return total_measure_; }

  double dist(int i, int j) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i) * n_ + j];
    return coord_dist(i, j);
  }

  bool has_table() const { return !table_.empty(); }
  const std::vector<double>& table() const { return table_; }
  bool has_coords() const { return !coords_.empty(); }
  int dim() const { return dim_; }
  Metric metric() const { return metric_; }
  const std::vector<double>& coords() const { return coords_; }
  double coord(int i, int axis) const {
    return coords_[static_cast<std::size_t>(i) * dim_ + axis];
  }

  // One-dimensional coordinate labels, id order equal to coordinate order,
  // distances realized as |x_i - x_j|: the precondition of the interval
  // fast paths.
  bool interval_structured() const;

  double min_positive_distance() const;
  double max_distance() const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  Space() = default;
  double coord_dist(int i, int j) const;
  void finish_init();

  int n_ = 0;
  std::vector<double> weights_;
  std::vector<double> table_;   // row-major n x n when explicit
  std::vector<double> coords_;  // row-major n x dim when coordinate-backed
  int dim_ = 0;
  Metric metric_ = Metric::kL2;
  double total_measure_ = 0.0;
};

struct QuasiMetricCertificate {
  double c0 = 1.0;      // symmetry constant, minimal
  double c1 = 1.0;      // quasi-triangle constant, minimal
  bool symmetric = false;
};

struct RadiusWindow {
  double r_min = 0.0;
  double r_max = 0.0;
  std::vector<double> grid;  // strictly increasing radii in [r_min, r_max]

  // Halving grid {r_max / 2^j} clipped to r_min, at most max_steps radii.
  // Successive halving is exact in binary floating point, so every grid
  // radius except the smallest has its half measured as well.
  static RadiusWindow dyadic(double r_min, double r_max, int max_steps);

  static RadiusWindow explicit_grid(double r_min, double r_max,
                                    std::vector<double> grid);
};

struct BallWitness {
  int center = -1;
  double radius = 0.0;
};

struct DoublingCertificate {
  double a_const = 1.0;      // max mu(B(x,r)) / mu(B(x,r/2)) on the window
  double delta_const = 1.0;  // max mu(B(x,r/2)) / mu(B(x,r)) on the window
  bool reverse_doubling = false;  // delta_const < 1
  BallWitness a_witness;
  BallWitness delta_witness;
  RadiusWindow window;
};

// Members are ordered by (distance from center, id): ball growth order.
// Averages and measures taken over that order are reproducible from scratch.
struct Ball {
  int center = -1;
  double radius = 0.0;
  std::vector<int> members;
};

struct BallFamilyEntry {
  int center = -1;
  double threshold = 0.0;  // distinct distance value; members = {d <= t}
  std::vector<int> members;
};

QuasiMetricCertificate verify_quasi_metric(const Space& space);
QuasiMetricCertificate verify_quasi_metric(const std::vector<double>& table,
                                           int n);

Ball open_ball(const Space& space, int x, double r);

// {y : dist(x,y) <= t} in ball growth order; equals the open ball of any
// radius in (t, next distinct distance].
std::vector<int> closed_ball_members(const Space& space, int x, double t);

std::vector<BallFamilyEntry> distinct_ball_family(const Space& space);

double ball_measure(const Space& space, int x, double r);

DoublingCertificate doubling_certificate(const Space& space,
                                         const RadiusWindow& window);

Space gen_dyadic_interval(int depth);
Space gen_grid_torus(int dim, int n);
Space gen_power_weight(int depth, double alpha);

Space load_space(const std::string& path);
void save_space(const Space& space, const std::string& path);

}  // namespace maxblow

#endif  // MAXBLOW_SPACE_HPP

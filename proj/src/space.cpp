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

#include "maxblow/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "maxblow/numeric.hpp"
#include "maxblow/parallel.hpp"

namespace maxblow {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kZeroDistanceOffDiagonal: return "ZeroDistanceOffDiagonal";
    case Errc::kNegativeDistance: return "NegativeDistance";
    case Errc::kNonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::kInvalidPoint: return "InvalidPoint";
    case Errc::kNonpositiveRadius: return "NonpositiveRadius";
    case Errc::kEmptyWindow: return "EmptyWindow";
    case Errc::kDepthOutOfRange: return "DepthOutOfRange";
    case Errc::kSizeOutOfRange: return "SizeOutOfRange";
    case Errc::kAlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::kParseError: return "ParseError";
    case Errc::kNonpositiveTolerance: return "NonpositiveTolerance";
    case Errc::kEmptyBall: return "EmptyBall";
    case Errc::kNotIntervalStructured: return "NotIntervalStructured";
    case Errc::kEmptySublevelSet: return "EmptySublevelSet";
    case Errc::kReverseDoublingRequired: return "ReverseDoublingRequired";
    case Errc::kNoDensityPoint: return "NoDensityPoint";
    case Errc::kNoAnnuli: return "NoAnnuli";
    case Errc::kEmptyAnnulusIntersection: return "EmptyAnnulusIntersection";
    case Errc::kSupportExponentTooLarge: return "SupportExponentTooLarge";
    case Errc::kDegenerateConstants: return "DegenerateConstants";
  }
  return "UnknownError";
}

std::string fmt_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int effective_threads() {
  int avail = omp_get_max_threads();
  if (const char* env = std::getenv("MAXBLOW_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0 && cap < avail) return static_cast<int>(cap);
  }
  return avail;
}

void Space::finish_init() {
  if (n_ < 1) throw Error(Errc::kSizeOutOfRange, "space needs n >= 1");
  CompensatedSum total;
  for (int i = 0; i < n_; ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw Error(Errc::kParseError,
                  "weight of point " + std::to_string(i) +
                      " must be strictly positive and finite");
    }
    total.add(weights_[i]);
  }
  total_measure_ = total.value();
}

Space Space::from_table(std::vector<double> weights,
                        std::vector<double> table) {
  Space s;
  s.n_ = static_cast<int>(weights.size());
  s.weights_ = std::move(weights);
  if (table.size() != static_cast<std::size_t>(s.n_) * s.n_) {
    throw Error(Errc::kParseError, "distance table is not n x n");
  }
  s.table_ = std::move(table);
  s.finish_init();
  return s;
}

Space Space::from_coords(std::vector<double> weights,
                         std::vector<double> coords, int dim, Metric metric) {
  Space s;
  s.n_ = static_cast<int>(weights.size());
  s.weights_ = std::move(weights);
  if (dim < 1 || dim > 3) {
    throw Error(Errc::kParseError, "coordinate dimension must be 1, 2 or 3");
  }
  if (coords.size() != static_cast<std::size_t>(s.n_) * dim) {
    throw Error(Errc::kParseError, "coordinate block is not n x dim");
  }
  s.coords_ = std::move(coords);
  s.dim_ = dim;
  s.metric_ = metric;
  s.finish_init();
  return s;
}

double Space::coord_dist(int i, int j) const {
  const double* a = &coords_[static_cast<std::size_t>(i) * dim_];
  const double* b = &coords_[static_cast<std::size_t>(j) * dim_];
  switch (metric_) {
    case Metric::kL2: {
      if (dim_ == 1) return std::abs(a[0] - b[0]);
      double s = 0.0;
      for (int ax = 0; ax < dim_; ++ax) s += (a[ax] - b[ax]) * (a[ax] - b[ax]);
      return std::sqrt(s);
    }
    case Metric::kLinf: {
      double m = 0.0;
      for (int ax = 0; ax < dim_; ++ax) m = std::max(m, std::abs(a[ax] - b[ax]));
      return m;
    }
    case Metric::kCircle: {
      // wrap-around max-coordinate distance, period 1 per axis
      double m = 0.0;
      for (int ax = 0; ax < dim_; ++ax) {
        double d = std::abs(a[ax] - b[ax]);
        d = std::min(d, 1.0 - d);
        m = std::max(m, d);
      }
      return m;
    }
  }
  return 0.0;
}

bool Space::interval_structured() const {
  if (coords_.empty() || dim_ != 1 || metric_ == Metric::kCircle) return false;
  for (int i = 1; i < n_; ++i) {
    if (!(coords_[i - 1] < coords_[i])) return false;
  }
  return true;
}

double Space::min_positive_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      double d = dist(i, j);
      if (d > 0.0 && d < best) best = d;
      d = dist(j, i);
      if (d > 0.0 && d < best) best = d;
    }
  }
  return best;
}

double Space::max_distance() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) best = std::max(best, dist(i, j));
  }
  return best;
}

bool operator==(const Space& a, const Space& b) {
  return a.n_ == b.n_ && a.weights_ == b.weights_ && a.table_ == b.table_ &&
         a.coords_ == b.coords_ && a.dim_ == b.dim_ && a.metric_ == b.metric_;
}

RadiusWindow RadiusWindow::dyadic(double r_min, double r_max, int max_steps) {
  if (!(r_min > 0.0) || !(r_max > 0.0) || r_min > r_max || max_steps < 1) {
    throw Error(Errc::kEmptyWindow, "need 0 < r_min <= r_max and steps >= 1");
  }
  std::vector<double> grid;
  double r = r_max;
  for (int j = 0; j < max_steps && r >= r_min; ++j) {
    grid.push_back(r);
    r /= 2.0;
  }
  if (grid.empty()) throw Error(Errc::kEmptyWindow, "no grid radii in window");
  std::reverse(grid.begin(), grid.end());
  RadiusWindow w;
  w.r_min = r_min;
  w.r_max = r_max;
  w.grid = std::move(grid);
  return w;
}

RadiusWindow RadiusWindow::explicit_grid(double r_min, double r_max,
                                         std::vector<double> grid) {
  if (!(r_min > 0.0) || r_min > r_max || grid.empty()) {
    throw Error(Errc::kEmptyWindow, "invalid window");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < r_min || grid[i] > r_max ||
        (i > 0 && !(grid[i - 1] < grid[i]))) {
      throw Error(Errc::kEmptyWindow, "grid must increase inside [r_min, r_max]");
    }
  }
  RadiusWindow w;
  w.r_min = r_min;
  w.r_max = r_max;
  w.grid = std::move(grid);
  return w;
}

namespace {

void validate_axiom_a(const Space& space) {
  const int n = space.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d = space.dist(i, j);
      if (!(d >= 0.0) || !std::isfinite(d)) {
        throw Error(Errc::kNegativeDistance,
                    "dist(" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + fmt_g12(d));
      }
      if (i == j && d != 0.0) {
        throw Error(Errc::kNonzeroDiagonal,
                    "dist(" + std::to_string(i) + "," + std::to_string(i) +
                        ") = " + fmt_g12(d));
      }
      if (i != j && d == 0.0) {
        throw Error(Errc::kZeroDistanceOffDiagonal,
                    "dist(" + std::to_string(i) + "," + std::to_string(j) +
                        ") = 0 for distinct points");
      }
    }
  }
}

}  // namespace

QuasiMetricCertificate verify_quasi_metric(const Space& space) {
  validate_axiom_a(space);
  const int n = space.size();
  QuasiMetricCertificate cert;

  double c0 = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      c0 = std::max(c0, space.dist(j, i) / space.dist(i, j));
    }
  }

  double c1 = 1.0;
  const int nt = effective_threads();
#pragma omp parallel for reduction(max : c1) num_threads(nt) schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dij = space.dist(i, j);
      double worst = std::numeric_limits<double>::infinity();
      for (int z = 0; z < n; ++z) {
        const double m = std::max(space.dist(i, z), space.dist(z, j));
        if (m < worst) worst = m;
      }
      c1 = std::max(c1, dij / worst);
    }
  }

  cert.c0 = c0;
  cert.c1 = c1;
  cert.symmetric = (c0 == 1.0);
  return cert;
}

QuasiMetricCertificate verify_quasi_metric(const std::vector<double>& table,
                                           int n) {
  std::vector<double> weights(static_cast<std::size_t>(n), 1.0);
  return verify_quasi_metric(Space::from_table(std::move(weights), table));
}

std::vector<int> closed_ball_members(const Space& space, int x, double t) {
  const int n = space.size();
  std::vector<std::pair<double, int>> hits;
  for (int y = 0; y < n; ++y) {
    const double d = space.dist(x, y);
    if (d <= t) hits.emplace_back(d, y);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<int> members;
  members.reserve(hits.size());
  for (const auto& [d, y] : hits) members.push_back(y);
  return members;
}

Ball open_ball(const Space& space, int x, double r) {
  if (x < 0 || x >= space.size()) {
    throw Error(Errc::kInvalidPoint, "point id " + std::to_string(x));
  }
  if (!(r > 0.0)) {
    throw Error(Errc::kNonpositiveRadius, "radius " + fmt_g12(r));
  }
  const int n = space.size();
  std::vector<std::pair<double, int>> hits;
  for (int y = 0; y < n; ++y) {
    const double d = space.dist(x, y);
    if (d < r) hits.emplace_back(d, y);
  }
  std::sort(hits.begin(), hits.end());
  Ball ball;
  ball.center = x;
  ball.radius = r;
  ball.members.reserve(hits.size());
  for (const auto& [d, y] : hits) ball.members.push_back(y);
  return ball;
}

std::vector<BallFamilyEntry> distinct_ball_family(const Space& space) {
  const int n = space.size();
  std::vector<BallFamilyEntry> family;
  std::vector<std::pair<double, int>> row(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) row[y] = {space.dist(x, y), y};
    std::sort(row.begin(), row.end());
    std::vector<int> members;
    members.reserve(n);
    for (int i = 0; i < n; ++i) {
      members.push_back(row[i].second);
      const bool last_of_value = (i + 1 == n) || (row[i + 1].first != row[i].first);
      if (last_of_value) {
        BallFamilyEntry entry;
        entry.center = x;
        entry.threshold = row[i].first;
        entry.members = members;
        family.push_back(std::move(entry));
      }
    }
  }
  return family;
}

double ball_measure(const Space& space, int x, double r) {
  CompensatedSum sum;
  const int n = space.size();
  for (int y = 0; y < n; ++y) {
    if (space.dist(x, y) < r) sum.add(space.weight(y));
  }
  return sum.value();
}

DoublingCertificate doubling_certificate(const Space& space,
                                         const RadiusWindow& window) {
  if (window.grid.empty()) throw Error(Errc::kEmptyWindow, "empty grid");
  for (double r : window.grid) {
    if (!(r / 2.0 > 0.0)) {
      throw Error(Errc::kEmptyWindow, "half radius underflows at " + fmt_g12(r));
    }
  }
  const int n = space.size();
  const int g = static_cast<int>(window.grid.size());

  struct Extremum {
    double ratio = 0.0;
    int center = -1;
    double radius = 0.0;
  };
  auto better = [](const Extremum& a, const Extremum& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    if (a.center != b.center) return a.center < b.center;
    return a.radius < b.radius;
  };

  const int nt = effective_threads();
  std::vector<Extremum> a_best(nt), d_best(nt);
#pragma omp parallel num_threads(nt)
  {
    const int tid = omp_get_thread_num();
    Extremum a_loc, d_loc;
    std::vector<double> row(n);
#pragma omp for schedule(static)
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) row[y] = space.dist(x, y);
      for (int gi = 0; gi < g; ++gi) {
        const double r = window.grid[gi];
        const double half = r / 2.0;
        CompensatedSum full_sum, half_sum;
        for (int y = 0; y < n; ++y) {
          if (row[y] < r) {
            full_sum.add(space.weight(y));
            if (row[y] < half) half_sum.add(space.weight(y));
          }
        }
        const double mu_full = full_sum.value();
        const double mu_half = half_sum.value();
        Extremum a_cand{mu_full / mu_half, x, r};
        Extremum d_cand{mu_half / mu_full, x, r};
        if (better(a_cand, a_loc)) a_loc = a_cand;
        if (better(d_cand, d_loc)) d_loc = d_cand;
      }
    }
    a_best[tid] = a_loc;
    d_best[tid] = d_loc;
  }

  Extremum a_all, d_all;
  for (int t = 0; t < nt; ++t) {
    if (better(a_best[t], a_all)) a_all = a_best[t];
    if (better(d_best[t], d_all)) d_all = d_best[t];
  }

  DoublingCertificate cert;
  cert.a_const = a_all.ratio;
  cert.delta_const = d_all.ratio;
  cert.reverse_doubling = d_all.ratio < 1.0;
  cert.a_witness = {a_all.center, a_all.radius};
  cert.delta_witness = {d_all.center, d_all.radius};
  cert.window = window;
  return cert;
}

Space gen_dyadic_interval(int depth) {
  if (depth < 1 || depth > 24) {
    throw Error(Errc::kDepthOutOfRange, "depth " + std::to_string(depth));
  }
  const std::int64_t n = std::int64_t{1} << depth;
  const double cell = std::ldexp(1.0, -depth);
  std::vector<double> coords(n), weights(n, cell);
  for (std::int64_t i = 0; i < n; ++i) {
    coords[i] = static_cast<double>(2 * i + 1) * std::ldexp(1.0, -(depth + 1));
  }
  return Space::from_coords(std::move(weights), std::move(coords), 1,
                            Metric::kL2);
}

Space gen_grid_torus(int dim, int n) {
  if (dim < 1 || dim > 3) {
    throw Error(Errc::kSizeOutOfRange, "dim " + std::to_string(dim));
  }
  if (n < 1) throw Error(Errc::kSizeOutOfRange, "n " + std::to_string(n));
  std::int64_t count = 1;
  for (int ax = 0; ax < dim; ++ax) {
    count *= n;
    if (count > (std::int64_t{1} << 20)) {
      throw Error(Errc::kSizeOutOfRange,
                  "n^dim exceeds 2^20 for n=" + std::to_string(n));
    }
  }
  std::vector<double> coords(static_cast<std::size_t>(count) * dim);
  std::vector<double> weights(count, std::pow(1.0 / n, dim));
  for (std::int64_t id = 0; id < count; ++id) {
    std::int64_t rest = id;
    for (int ax = dim - 1; ax >= 0; --ax) {
      coords[static_cast<std::size_t>(id) * dim + ax] =
          static_cast<double>(rest % n) / n;
      rest /= n;
    }
  }
  return Space::from_coords(std::move(weights), std::move(coords), dim,
                            Metric::kCircle);
}

Space gen_power_weight(int depth, double alpha) {
  if (depth < 1 || depth > 24) {
    throw Error(Errc::kDepthOutOfRange, "depth " + std::to_string(depth));
  }
  if (!(alpha >= 0.0) || alpha > 3.0) {
    throw Error(Errc::kAlphaOutOfRange, "alpha " + fmt_g12(alpha));
  }
  const std::int64_t n = std::int64_t{1} << depth;
  const double cell = std::ldexp(1.0, -depth);
  std::vector<double> coords(n), weights(n);
  for (std::int64_t i = 0; i < n; ++i) {
    coords[i] = static_cast<double>(2 * i + 1) * std::ldexp(1.0, -(depth + 1));
    weights[i] = std::pow(coords[i], alpha) * cell;
  }
  return Space::from_coords(std::move(weights), std::move(coords), 1,
                            Metric::kL2);
}

}  // namespace maxblow

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

#ifndef MAXBLOW_COUNTEREXAMPLE_HPP
#define MAXBLOW_COUNTEREXAMPLE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "maxblow/maximal.hpp"
#include "maxblow/space.hpp"
#include "maxblow/varlp.hpp"

namespace maxblow {

// {x : p(x) < 1 + 1/k}, strict comparison, ids ascending.
std::vector<int> sublevel_set(const ExponentFunction& p, int k);

struct DensityPoint {
  int point = -1;
  double radius = 0.0;       // largest admissible R
  double min_density = 0.0;  // min over grid radii <= R of mu(E cap B)/mu(B)
};

// Exhaustive surrogate for the density-point existence argument: among
// points of E, pick the one admitting the largest R < 1 such that every
// grid radius r <= R has relative E-density above (1+delta)/2; ties go to
// the smallest id.
DensityPoint find_density_point(const Space& space, const std::vector<int>& E,
                                const DoublingCertificate& cert);

struct AnnulusDecomposition {
  int center = -1;
  std::vector<double> radii;              // R/2^i, i = 0..J
  std::vector<std::vector<int>> balls;    // B^i, ball growth order
  std::vector<std::vector<int>> annuli;   // B^i \ B^{i+1}, i = 0..J-1
  std::vector<int> core;                  // B^J
  int depth() const { return static_cast<int>(annuli.size()); }  // J
};

AnnulusDecomposition annulus_decomposition(const Space& space, int x_k,
                                           double R_k,
                                           const RadiusWindow& window);

enum class WitnessMode { kDensity, kUsc };

struct WitnessFunction {
  PointFunction values;
  int k = 0;
  double a_used = 0.0;
  AnnulusDecomposition decomposition;
  WitnessMode mode = WitnessMode::kDensity;
  std::vector<int> support;  // ids ascending
};

// f_k = 1/(a^{i/k} mu(ann_i)) on annulus i intersected with the support
// (E in density mode, the whole outer ball in usc mode), zero elsewhere
// including the core ball.
WitnessFunction build_witness(const Space& space,
                              const AnnulusDecomposition& dec,
                              const std::vector<int>& E, double a_used, int k,
                              WitnessMode mode);

struct ModularCheck {
  double modular_value = 0.0;
  double paper_bound = 0.0;
};

// Exact modular of the witness plus the truncated geometric-series bound
// mu(B^0) + [(1-delta) mu(B^0)]^{-1/k} sum_{i=0}^{J} (a^{-1/k^2})^i
// built from the certificate constants.
ModularCheck modular_finite_check(const Space& space, const ExponentFunction& p,
                                  const WitnessFunction& witness,
                                  const DoublingCertificate& cert);

// g(x) = average of the witness over B^{i(x)} for support points in annulus
// i(x); zero elsewhere. Pointwise competitor: g <= Mf_k everywhere.
PointFunction pointwise_certificate(const Space& space,
                                    const WitnessFunction& witness);

// (1-delta)^2 / (2 (1 - a^{-1/k})) and its truncated-series analogue
// (1-delta)^2/2 * sum_{m=0}^{terms-1} a^{-m/k}.
double theory_bound(double a, double delta, int k);
double finite_theory_bound(double a, double delta, int k, int terms);

struct BlowupReport {
  int k = 0;
  DensityPoint density_point;
  int annulus_count = 0;  // J
  double modular_fk = 0.0;
  double norm_fk = 0.0;
  double norm_Mfk = 0.0;
  double ratio = 0.0;            // norm_Mfk / norm_fk
  double certified_ratio = 0.0;  // norm of the pointwise certificate / norm_fk
  double theory_bound = 0.0;
  double finite_theory_bound = 0.0;
};

BlowupReport blowup_report(const Space& space, const ExponentFunction& p,
                           int k, const DoublingCertificate& cert,
                           const RadiusWindow& window, double tol,
                           WitnessMode mode);

struct SweepResult {
  std::vector<BlowupReport> rows;  // sorted by k
  bool growth_verified = false;
};

// One report per k. The divergence witness compares the certified ratios:
// whenever the theory bound grows by 4x between the extreme k, the certified
// ratio must grow by at least 2x.
SweepResult sweep(const Space& space, const ExponentFunction& p,
                  const std::vector<int>& k_list,
                  const DoublingCertificate& cert, const RadiusWindow& window,
                  double tol, WitnessMode mode);

std::string format_report(const BlowupReport& report);
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace maxblow

#endif  // MAXBLOW_COUNTEREXAMPLE_HPP

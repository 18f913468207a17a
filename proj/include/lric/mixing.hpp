// Copyright 2026 The lricwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lric/dephasing.hpp"
#include "lric/graph.hpp"

namespace lric {

/// sum_j |p_j - 1/N|. No factor 1/2: epsilon thresholds compare directly
/// against the mixing-time bounds below.
double tv_distance(std::span<const double> p);

/// Earliest sampled time T with tv <= epsilon at T and at every later sample
/// (sustained crossing); nullopt if the trajectory never settles below
/// epsilon. Throws InvalidArgument when the tv drop across the crossing is
/// not below epsilon / 10, i.e. the sampling is too coarse to locate it.
std::optional<double> mixing_time_numeric(const Trajectory& traj,
                                          double epsilon);

struct BoundValue {
  double value = 0.0;
  /// The logarithm was <= 0 (epsilon >= 2/N) and the bound was clamped to 0.
  bool clamped = false;
};

/// Exact form 2 gamma ln(2/(N eps)) / (sin^2(pi/N) + sin^2(pi m/N)) or the
/// N >> 1 form 2 gamma N^2 ln(2/(N eps)) / (pi^2 (1 + m^2)).
BoundValue lower_bound(const LricSpec& spec, double gamma, double epsilon,
                       bool asymptotic = false);

/// gamma N^2 ln((2 + eps)/eps) / (2 (1 + m^2)).
double upper_bound(const LricSpec& spec, double gamma, double epsilon);

/// Small-gamma upper bounds quoted from earlier work, for reference:
/// (1/gamma) ln(N/eps) N/(N-2) for odd m, (1/gamma) ln(N/eps) N/(N-1) for
/// even m. `applicable` is false for gamma >= 1.
struct SmallGammaBounds {
  double odd_m = 0.0;
  double even_m = 0.0;
  bool applicable = false;
};

SmallGammaBounds small_gamma_reference_bounds(const LricSpec& spec,
                                              double gamma, double epsilon);

enum class MixingSource { kAuto, kSimulator, kAnalytic };

std::string to_string(MixingSource s);

struct SandwichOptions {
  MixingSource source = MixingSource::kAuto;
  /// Samples on [0, horizon].
  int samples = 4000;
  IntegratorSettings integrator;
};

struct MixingReport {
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  double epsilon = 0.0;
  std::optional<double> t_mix;  ///< nullopt: not reached within the horizon
  double t_lower_exact = 0.0;
  double t_lower_asymptotic = 0.0;
  double t_upper = 0.0;
  bool lower_clamped = false;
  /// nullopt when the horizon is shorter than the upper bound.
  std::optional<bool> sandwich_ok;
  double horizon = 0.0;
  /// "sim", "analytic" or "failed".
  std::string source;
  std::string error;
};

/// Simulator for gamma <= 100 and N <= 16, closed form otherwise.
MixingSource resolve_source(MixingSource requested, const LricSpec& spec,
                            double gamma);

/// 1.1 x upper bound.
double default_horizon(const LricSpec& spec, double gamma, double epsilon);

/// Runs the walk from node 0 up to `horizon`, extracts the mixing time and
/// brackets it with the exact lower bound and the upper bound.
MixingReport sandwich_check(const LricSpec& spec, double gamma, double epsilon,
                            double horizon, const SandwichOptions& options = {});

struct SweepGrid {
  std::vector<int> n;
  std::vector<int> m;
  std::vector<double> gamma;
  std::vector<double> epsilon;
  /// Horizon per point; nullopt uses default_horizon.
  std::optional<double> horizon;
};

/// Grid points in lexicographic (n, m, gamma, epsilon) order. Invalid (N, m)
/// pairs and failed runs produce rows with source "failed".
std::vector<MixingReport> run_sweep(const SweepGrid& grid,
                                    const SandwichOptions& options = {});

/// Reference implementation: same rows, one point at a time.
std::vector<MixingReport> run_sweep_serial(const SweepGrid& grid,
                                           const SandwichOptions& options = {});

}  // namespace lric

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

#include <span>
#include <string>
#include <vector>

#include "lric/coherent_walk.hpp"
#include "lric/density_matrix.hpp"
#include "lric/graph.hpp"
#include "lric/kernels.hpp"

namespace lric {

/// d rho / dt for the dephasing walk:
///   (i/4)[-rho_{j-1,k} - rho_{j+1,k} - rho_{j-m,k} - rho_{j+m,k}
///         + rho_{j,k-1} + rho_{j,k+1} + rho_{j,k-m} + rho_{j,k+m}]
///   - gamma (1 - delta_jk) rho_jk
/// with indices mod N. Cycle mode drops the +-m terms.
ComplexMatrix master_rhs(const ComplexMatrix& rho, const LricSpec& spec,
                         double gamma);

struct IntegratorSettings {
  /// Step size in units of the inverse hopping rate.
  double dt = 0.0125;
  /// The first `warmup_time` of every integration runs at dt / warmup_refinement
  /// to resolve the 1/gamma layer in which coherences build up.
  double warmup_time = 0.5;
  int warmup_refinement = 8;
  /// Use the OpenMP commutator kernel instead of the serial one.
  bool parallel_kernel = false;
  /// Overrides the coherent kernel entirely (test fixtures).
  kernels::CoherentKernel kernel;
};

inline constexpr const char* kIntegratorId = "etdrk4";

/// Exponential Runge-Kutta (Cox-Matthews ETDRK4) for the master equation.
/// Dephasing is diagonal in the (j, k) basis and is integrated exactly
/// through e^{-gamma h} and the phi-functions; the coherent commutator is the
/// explicit part. On the diagonal, and for gamma = 0, the scheme is classical
/// RK4. Step size is limited by the coherent generator (norm <= 2), not by
/// gamma.
class DephasingIntegrator {
 public:
  DephasingIntegrator(LricSpec spec, double gamma,
                      IntegratorSettings settings = {});

  /// Advances `state` to absolute time `t_target` (>= state.time). Time
  /// spent since `origin()` below warmup_time uses the refined step.
  /// Throws IntegratorFailure if the state becomes non-finite.
  void advance(DensityMatrix& state, double t_target);

  void set_origin(double t0) noexcept { origin_ = t0; }
  double origin() const noexcept { return origin_; }

  const LricSpec& spec() const noexcept { return spec_; }
  double gamma() const noexcept { return gamma_; }
  const IntegratorSettings& settings() const noexcept { return settings_; }

 private:
  struct Coefficients {
    double h = 0.0;
    // [0] diagonal entries, [1] off-diagonal entries.
    double e_full[2]{};
    double e_half[2]{};
    double half_phi1[2]{};  // (h/2) phi1(z/2)
    double w_u[2]{};        // h (phi1 - 3 phi2 + 4 phi3)
    double w_ab[2]{};       // h (2 phi2 - 4 phi3)
    double w_c[2]{};        // h (4 phi3 - phi2)
  };

  Coefficients coefficients_for(double h) const;
  void step(ComplexMatrix& u, const Coefficients& c);
  void apply_kernel(const ComplexMatrix& in, ComplexMatrix& out);
  void integrate_segment(DensityMatrix& state, double t_end, double h_nominal);

  LricSpec spec_;
  double gamma_;
  IntegratorSettings settings_;
  double origin_ = 0.0;
  ComplexMatrix nu_, na_, nb_, nc_, a_, b_, c_;
  Eigen::VectorXcd diag_;
};

/// rho0 evolved for a duration `t_final`. The returned state's time is
/// rho0.time + t_final.
DensityMatrix evolve(const DensityMatrix& rho0, const LricSpec& spec,
                     double gamma, double t_final,
                     const IntegratorSettings& settings = {});

struct TrajectoryMetadata {
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  std::string integrator;
  double dt = 0.0;
  /// Analytic trajectories evaluated below the large-gamma regime.
  bool out_of_regime = false;
};

/// Time-stamped node distributions. Times strictly increase.
struct Trajectory {
  std::vector<ProbabilityVector> samples;
  TrajectoryMetadata metadata;
};

/// Diagonals of rho(t) at each of `times` (sorted, non-negative, measured
/// from rho0). One integrator runs through all samples.
Trajectory sample_trajectory(const DensityMatrix& rho0, const LricSpec& spec,
                             double gamma, std::span<const double> times,
                             const IntegratorSettings& settings = {});

/// Uniform grid 0, dt, 2 dt, ... up to t_max (inclusive); t_max = 0 gives
/// the single time 0.
std::vector<double> uniform_times(double t_max, double sample_dt);

}  // namespace lric

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

#include <array>
#include <span>
#include <vector>

#include "lric/density_matrix.hpp"
#include "lric/dephasing.hpp"
#include "lric/graph.hpp"

namespace lric {

/// Below this decoherence rate the closed form is outside its regime.
inline constexpr double kLargeGammaRegime = 10.0;

inline constexpr const char* kAnalyticSourceId = "analytic-eq34";

/// Decay rates of Fourier mode k in the large-gamma reduction.
struct ModeRate {
  double slow = 0.0;     ///< (1/2 gamma)(sin^2(pi k/N) + sin^2(pi k m/N))
  double fast = 0.0;     ///< gamma - slow
  double zero = 0.0;     ///< always 0
  double dephase = 0.0;  ///< gamma
};

struct ModeRates {
  double gamma = 0.0;
  std::vector<ModeRate> modes;  ///< indexed by k in [0, N)
};

/// Leading-order amplitudes of the retained branches (slow, fast, dephase) for
/// the populations a, nearest-neighbour bonds d and long-range bonds f.
struct ModeCoefficient {
  std::array<Complex, 3> a{};
  std::array<Complex, 3> d{};
  std::array<Complex, 3> f{};
};

struct ModeCoefficients {
  double gamma = 0.0;
  std::vector<ModeCoefficient> modes;
};

/// s_k = sin^2(pi k / N) + sin^2(pi k m / N); the second term vanishes for
/// the cycle.
double mode_weight(const LricSpec& spec, int k);

/// Throws InvalidArgument unless gamma > 0.
ModeRates mode_rates(const LricSpec& spec, double gamma);
ModeCoefficients mode_coefficients(const LricSpec& spec, double gamma);

/// a_j(t) = (1/N) sum_k exp(-slow_k t) omega^{jk}, omega = exp(2 pi i / N),
/// for a walker started on node 0.
double analytic_probability(const LricSpec& spec, double gamma, double t,
                            int node);

/// All N populations at time t.
std::vector<double> analytic_populations(const LricSpec& spec, double gamma,
                                         double t);

struct BondAmplitudes {
  std::vector<Complex> d;  ///< d_j = S_{j,j+1} + S_{j+1,j}
  std::vector<Complex> f;  ///< f_j for the +-m bonds; all zero for the cycle
};

/// d_j(t), f_j(t) assembled from the slow, fast and dephasing branches.
BondAmplitudes analytic_offdiagonals(const LricSpec& spec, double gamma,
                                     double t);

/// Banded density matrix: populations on the diagonal, the bond amplitudes at
/// offsets +-1 and +-m (rho_{j,j+1} = -i d_j / 2, rho_{j,j+m} = -i f_j / 2
/// and their conjugates), zero elsewhere.
ComplexMatrix analytic_density(const LricSpec& spec, double gamma, double t);

/// Closed-form distribution on a time grid (sorted, non-negative). Metadata
/// integrator is "analytic-eq34"; out_of_regime is set for gamma < 10.
Trajectory analytic_distribution(const LricSpec& spec, double gamma,
                                 std::span<const double> times);

}  // namespace lric

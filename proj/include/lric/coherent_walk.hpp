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
#include <vector>

#include "lric/graph.hpp"
#include "lric/types.hpp"

namespace lric {

/// Node occupation probabilities at one instant.
struct ProbabilityVector {
  std::vector<double> probs;
  double time = 0.0;
};

/// exp(-i scale H t)|start> through the Bloch basis:
///   psi_j = (1/N) sum_k exp(-i scale E_k t) exp(2 pi i k (j - start) / N).
/// scale = 1 is the bare Hamiltonian; scale = 1/4 matches the coherent part
/// of the dephasing master equation.
std::vector<Complex> coherent_amplitudes(const LricSpec& spec, double t,
                                         int start = 0, double scale = 1.0);

ProbabilityVector coherent_probabilities(const LricSpec& spec, double t,
                                         int start = 0, double scale = 1.0);

/// Entries in [-tol, 1 + tol] and a sum within tol of one.
bool is_probability_vector(std::span<const double> p, double tol = 1e-9);

}  // namespace lric

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

#include <Eigen/Core>

#include "lric/density_matrix.hpp"
#include "lric/graph.hpp"

namespace lric::oracle {

/// Dense generators above this N need an explicit override.
inline constexpr int kDefaultMaxNodes = 12;

/// N^2 x N^2 generator acting on the row-major vectorization of rho
/// (index j*N + k):
///   L = -i (H/4 (x) I - I (x) (H/4)^T) - gamma diag(1 - delta_jk).
/// Built from the Hamiltonian matrix, independently of the stencil kernels.
Eigen::MatrixXcd build_liouvillian(const LricSpec& spec, double gamma,
                                   int max_nodes = kDefaultMaxNodes);

/// vec(rho(t)) = expm(L t) vec(rho0) by scaling and squaring.
DensityMatrix exact_evolve(const DensityMatrix& rho0, const LricSpec& spec,
                           double gamma, double t,
                           int max_nodes = kDefaultMaxNodes);

/// Row-major vectorization and its inverse.
Eigen::VectorXcd vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const Eigen::VectorXcd& v, int n);

}  // namespace lric::oracle

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

#include <functional>

#include "lric/graph.hpp"
#include "lric/types.hpp"

namespace lric::kernels {

/// Writes the coherent part of the dephasing master equation,
///   out_jk = (i/4) sum_o [rho_{j, k+o} - rho_{j+o, k}],
/// o running over the neighbour offsets of the spec, indices mod N. This is
/// -i [H/4, rho]; the diagonal of H cancels in the commutator.
///
/// `out` is resized as needed and must not alias `rho`.
void coherent_commutator_serial(const LricSpec& spec, const ComplexMatrix& rho,
                                ComplexMatrix& out);

/// Same stencil, rows distributed over OpenMP threads. Each output entry is
/// computed with the same operation order as the serial kernel, so the two
/// agree bit for bit.
void coherent_commutator_omp(const LricSpec& spec, const ComplexMatrix& rho,
                             ComplexMatrix& out);

/// Row count at which the OpenMP kernel actually forks.
inline constexpr int kParallelRowThreshold = 48;

using CoherentKernel = std::function<void(const LricSpec&,
                                          const ComplexMatrix&,
                                          ComplexMatrix&)>;

}  // namespace lric::kernels

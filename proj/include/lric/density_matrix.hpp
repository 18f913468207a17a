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

#include <map>
#include <span>
#include <vector>

#include "lric/types.hpp"

namespace lric {

/// Walker state: N x N complex, Hermitian, unit trace, positive semidefinite.
struct DensityMatrix {
  ComplexMatrix rho;
  double time = 0.0;

  int dim() const noexcept { return static_cast<int>(rho.rows()); }

  /// |node><node|.
  static DensityMatrix localized(int n_nodes, int node = 0);
  /// I / N.
  static DensityMatrix maximally_mixed(int n_nodes);
  /// |psi><psi| for a normalized copy of psi.
  static DensityMatrix pure(std::span<const Complex> psi);

  std::vector<double> populations() const;
};

/// |trace - 1|.
double trace_deviation(const ComplexMatrix& rho);
/// max |rho_jk - conj(rho_kj)|.
double hermiticity_defect(const ComplexMatrix& rho);
/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const ComplexMatrix& rho);

/// Signed representative of (k - j) mod N in (-N/2, N/2].
int representative_offset(int j, int k, int n);

/// S_jk = i^(k-j) rho_jk with k - j taken as its representative offset.
ComplexMatrix s_transform(const ComplexMatrix& rho);

/// D_k = sum_j S_{j, (j+k) mod N}, k = 0..N-1.
std::vector<Complex> diagonal_sums(const ComplexMatrix& rho);

/// Offset d in [1, N/2] -> max_j |rho_{j, j+d}|.
std::map<int, double> offdiagonal_profile(const ComplexMatrix& rho);

}  // namespace lric

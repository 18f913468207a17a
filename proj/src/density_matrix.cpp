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

#include "lric/density_matrix.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "lric/errors.hpp"

namespace lric {

DensityMatrix DensityMatrix::localized(int n_nodes, int node) {
  if (n_nodes <= 0 || node < 0 || node >= n_nodes) {
    throw InvalidArgument("localized state: node outside [0, N)");
  }
  DensityMatrix d;
  d.rho = ComplexMatrix::Zero(n_nodes, n_nodes);
  d.rho(node, node) = 1.0;
  return d;
}

DensityMatrix DensityMatrix::maximally_mixed(int n_nodes) {
  if (n_nodes <= 0) throw InvalidArgument("maximally mixed: N must be > 0");
  DensityMatrix d;
  d.rho = ComplexMatrix::Identity(n_nodes, n_nodes) /
          static_cast<double>(n_nodes);
  return d;
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) {
  const auto n = static_cast<Eigen::Index>(psi.size());
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = psi[i];
  const double norm = v.norm();
  if (n == 0 || norm == 0.0) throw InvalidArgument("pure state: zero vector");
  v /= norm;
  DensityMatrix d;
  d.rho = v * v.adjoint();
  return d;
}

std::vector<double> DensityMatrix::populations() const {
  std::vector<double> p(dim());
  for (int j = 0; j < dim(); ++j) p[j] = rho(j, j).real();
  return p;
}

double trace_deviation(const ComplexMatrix& rho) {
  return std::abs(rho.trace() - Complex{1.0, 0.0});
}

double hermiticity_defect(const ComplexMatrix& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& rho) {
  const Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

int representative_offset(int j, int k, int n) {
  int d = ((k - j) % n + n) % n;  // [0, N)
  if (2 * d > n) d -= n;          // (-N/2, N/2]
  return d;
}

namespace {

Complex i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

ComplexMatrix s_transform(const ComplexMatrix& rho) {
  const int n = static_cast<int>(rho.rows());
  ComplexMatrix s(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      s(j, k) = i_power(representative_offset(j, k, n)) * rho(j, k);
    }
  }
  return s;
}

std::vector<Complex> diagonal_sums(const ComplexMatrix& rho) {
  const int n = static_cast<int>(rho.rows());
  const ComplexMatrix s = s_transform(rho);
  std::vector<Complex> sums(n, Complex{0.0, 0.0});
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) sums[k] += s(j, (j + k) % n);
  }
  return sums;
}

std::map<int, double> offdiagonal_profile(const ComplexMatrix& rho) {
  const int n = static_cast<int>(rho.rows());
  std::map<int, double> profile;
  for (int d = 1; 2 * d <= n; ++d) {
    double mx = 0.0;
    for (int j = 0; j < n; ++j) mx = std::max(mx, std::abs(rho(j, (j + d) % n)));
    profile[d] = mx;
  }
  return profile;
}

}  // namespace lric

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

#include "lric/oracle.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "lric/errors.hpp"

namespace lric::oracle {

namespace {

void guard(const LricSpec& spec, int max_nodes) {
  if (spec.n_nodes() > max_nodes) {
    throw SizeGuardError("dense Liouvillian for N = " +
                         std::to_string(spec.n_nodes()) + " exceeds the guard N <= " +
                         std::to_string(max_nodes));
  }
}

}  // namespace

Eigen::VectorXcd vectorize(const ComplexMatrix& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

ComplexMatrix unvectorize(const Eigen::VectorXcd& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) {
    throw InvalidArgument("unvectorize: length is not N^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

Eigen::MatrixXcd build_liouvillian(const LricSpec& spec, double gamma,
                                   int max_nodes) {
  guard(spec, max_nodes);
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("gamma must be finite and >= 0");
  }
  const int n = spec.n_nodes();
  const Eigen::MatrixXcd h = build_hamiltonian(spec).cast<Complex>() * 0.25;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd l = Complex{0.0, -1.0} * (Eigen::MatrixXcd(Eigen::kroneckerProduct(h, id)) -
                                            Eigen::MatrixXcd(Eigen::kroneckerProduct(id, h.transpose())));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j != k) l(j * n + k, j * n + k) -= gamma;
    }
  }
  return l;
}

DensityMatrix exact_evolve(const DensityMatrix& rho0, const LricSpec& spec,
                           double gamma, double t, int max_nodes) {
  guard(spec, max_nodes);
  if (rho0.dim() != spec.n_nodes()) {
    throw InvalidArgument("exact_evolve: dimension mismatch");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("exact_evolve: t must be finite and >= 0");
  }
  DensityMatrix out;
  out.time = rho0.time + t;
  if (t == 0.0) {
    out.rho = rho0.rho;
    return out;
  }
  const Eigen::MatrixXcd lt = build_liouvillian(spec, gamma, max_nodes) * t;
  const Eigen::MatrixXcd propagator = lt.exp();
  out.rho = unvectorize(propagator * vectorize(rho0.rho), spec.n_nodes());
  return out;
}

}  // namespace lric::oracle

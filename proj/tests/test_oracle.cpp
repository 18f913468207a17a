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


#include <random>

#include <gtest/gtest.h>

#include "lric/coherent_walk.hpp"
#include "lric/dephasing.hpp"
#include "lric/errors.hpp"
#include "lric/oracle.hpp"
#include "test_util.hpp"

namespace lric {
namespace {

TEST(Oracle, Dimensions) {
  const auto l = oracle::build_liouvillian(LricSpec(6, 2), 3.0);
  EXPECT_EQ(l.rows(), 36);
  EXPECT_EQ(l.cols(), 36);
}

TEST(Oracle, SizeGuard) {
  EXPECT_THROW(oracle::build_liouvillian(LricSpec(13, 3), 1.0), SizeGuardError);
  EXPECT_NO_THROW(oracle::build_liouvillian(LricSpec(13, 3), 1.0, 13));
  EXPECT_THROW(oracle::exact_evolve(DensityMatrix::localized(13, 0), LricSpec(13, 3), 1.0, 1.0),
               SizeGuardError);
}

TEST(Oracle, MaximallyMixedInKernel) {
  for (const auto& s : {LricSpec(6, 2), LricSpec(8, 3), LricSpec(5, 0), LricSpec(12, 5)}) {
    const auto l = oracle::build_liouvillian(s, 2.5);
    const auto v = oracle::vectorize(DensityMatrix::maximally_mixed(s.n_nodes()).rho);
    EXPECT_LT((l * v).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Oracle, ReproducesRhsOnMatrixUnits) {
  for (const auto& s : {LricSpec(6, 2), LricSpec(8, 3), LricSpec(7, 0), LricSpec(5, 2)}) {
    const int n = s.n_nodes();
    const double gamma = 3.0;
    const auto l = oracle::build_liouvillian(s, gamma);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(a, b) = 1.0;
        const ComplexMatrix got = oracle::unvectorize(l * oracle::vectorize(e), n);
        ASSERT_LT(testing::max_abs(got - master_rhs(e, s, gamma)), 1e-12)
            << "unit (" << a << "," << b << ")";
      }
    }
  }
}

TEST(Oracle, VectorizeRoundTrip) {
  std::mt19937_64 rng(9);
  const ComplexMatrix r = testing::random_density(5, rng);
  EXPECT_EQ(oracle::unvectorize(oracle::vectorize(r), 5), r);
  EXPECT_EQ(oracle::vectorize(r)(1), r(0, 1));
}

TEST(Oracle, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(10);
  DensityMatrix rho0{testing::random_density(6, rng), 0.0};
  const auto out = oracle::exact_evolve(rho0, LricSpec(6, 2), 4.0, 0.0);
  EXPECT_LT(testing::max_abs(out.rho - rho0.rho), 1e-15);
}

TEST(Oracle, CoherentLimitMatchesDensePropagator) {
  const LricSpec s(8, 3);
  const auto out = oracle::exact_evolve(DensityMatrix::localized(8, 0), s, 0.0, 6.0);
  EXPECT_LT(testing::max_abs_diff(out.populations(),
                                  coherent_probabilities(s, 6.0, 0, 0.25).probs),
            1e-9);
  // Full density matrix against U rho U^dagger.
  const Eigen::MatrixXcd u = testing::dense_propagator(s, 6.0, 0.25);
  const ComplexMatrix want = u.col(0) * u.col(0).adjoint();
  EXPECT_LT(testing::max_abs(out.rho - want), 1e-9);
}

TEST(Oracle, AgreesWithIntegrator) {
  const LricSpec s(8, 3);
  const auto rho0 = DensityMatrix::localized(8, 0);
  const auto a = oracle::exact_evolve(rho0, s, 20.0, 10.0);
  const auto b = evolve(rho0, s, 20.0, 10.0);
  EXPECT_LT(testing::max_abs(a.rho - b.rho), 1e-6);
}

TEST(Oracle, Semigroup) {
  std::mt19937_64 rng(12);
  const LricSpec s(6, 2);
  DensityMatrix rho0{testing::random_density(6, rng), 0.0};
  const auto once = oracle::exact_evolve(rho0, s, 1.7, 3.0);
  const auto twice =
      oracle::exact_evolve(oracle::exact_evolve(rho0, s, 1.7, 1.2), s, 1.7, 1.8);
  EXPECT_LT(testing::max_abs(once.rho - twice.rho), 1e-12);
}

TEST(Oracle, KeepsStatePhysical) {
  std::mt19937_64 rng(13);
  const LricSpec s(7, 3);
  DensityMatrix rho0{testing::random_density(7, rng), 0.0};
  const auto out = oracle::exact_evolve(rho0, s, 0.8, 5.0);
  EXPECT_LT(trace_deviation(out.rho), 1e-12);
  EXPECT_LT(hermiticity_defect(out.rho), 1e-12);
  EXPECT_GT(min_eigenvalue(out.rho), -1e-12);
}

}  // namespace
}  // namespace lric

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
#include "lric/density_matrix.hpp"
#include "lric/errors.hpp"
#include "lric/oracle.hpp"
#include "test_util.hpp"

namespace lric {
namespace {

TEST(CoherentWalk, IdentityAtTimeZero) {
  const LricSpec s(8, 3);
  const auto amp = coherent_amplitudes(s, 0.0, 5);
  for (int j = 0; j < 8; ++j) {
    EXPECT_NEAR(std::abs(amp[j] - Complex(j == 5 ? 1.0 : 0.0)), 0.0, 1e-15);
  }
  const auto p = coherent_probabilities(s, 0.0, 2);
  EXPECT_NEAR(p.probs[2], 1.0, 1e-15);
  EXPECT_EQ(p.time, 0.0);
}

TEST(CoherentWalk, MatchesDenseExponential) {
  const LricSpec s(6, 2);
  const Eigen::MatrixXcd u = testing::dense_propagator(s, 1.0);
  const auto amp = coherent_amplitudes(s, 1.0, 0, 1.0);
  for (int j = 0; j < 6; ++j) EXPECT_LT(std::abs(amp[j] - u(j, 0)), 1e-8);

  const Eigen::MatrixXcd uq = testing::dense_propagator(s, 7.5, 0.25);
  const auto amq = coherent_amplitudes(s, 7.5, 3, 0.25);
  for (int j = 0; j < 6; ++j) EXPECT_LT(std::abs(amq[j] - uq(j, 3)), 1e-8);
}

TEST(CoherentWalk, ReflectionAboutStart) {
  const LricSpec s(8, 3);
  for (int start : {0, 3, 6}) {
    const auto p = coherent_probabilities(s, 4.2, start).probs;
    for (int j = 0; j < 8; ++j) {
      EXPECT_NEAR(p[j], p[((2 * start - j) % 8 + 8) % 8], 1e-12);
    }
  }
}

TEST(CoherentWalk, MatchesOracleDiagonal) {
  const LricSpec s(6, 2);
  const auto rho = oracle::exact_evolve(DensityMatrix::localized(6, 0), s, 0.0, 2.5);
  const auto p = coherent_probabilities(s, 2.5, 0, 0.25).probs;
  EXPECT_LT(testing::max_abs_diff(p, rho.populations()), 1e-8);
}

TEST(CoherentWalk, RejectsBadArguments) {
  const LricSpec s(6, 2);
  EXPECT_THROW(coherent_amplitudes(s, 1.0, 6), InvalidArgument);
  EXPECT_THROW(coherent_amplitudes(s, 1.0, -1), InvalidArgument);
  EXPECT_THROW(coherent_amplitudes(s, 1.0, 0, 0.0), InvalidArgument);
}

TEST(CoherentWalk, ProbabilityVectorPredicate) {
  EXPECT_TRUE(is_probability_vector(std::vector<double>{0.25, 0.75}));
  EXPECT_FALSE(is_probability_vector(std::vector<double>{0.5, 0.6}));
  EXPECT_FALSE(is_probability_vector(std::vector<double>{-0.1, 1.1}));
  EXPECT_FALSE(is_probability_vector(std::vector<double>{NAN, 1.0}));
}

TEST(CoherentWalkProperty, TranslationAndNormalisation) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> td(0.0, 50.0);
  for (int trial = 0; trial < 40; ++trial) {
    const LricSpec s = testing::random_spec(rng, 3, 64);
    const int n = s.n_nodes();
    const double t = td(rng);
    const int c = static_cast<int>(rng() % n);
    const auto a0 = coherent_amplitudes(s, t, 0);
    const auto ac = coherent_amplitudes(s, t, c);
    for (int j = 0; j < n; ++j) {
      ASSERT_LT(std::abs(a0[j] - ac[(j + c) % n]), 1e-10);
    }
    EXPECT_TRUE(is_probability_vector(coherent_probabilities(s, t, c).probs, 1e-10));
  }
}

}  // namespace
}  // namespace lric

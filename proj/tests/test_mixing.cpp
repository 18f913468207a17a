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


#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lric/errors.hpp"
#include "lric/large_gamma.hpp"
#include "lric/mixing.hpp"
#include "test_util.hpp"

namespace lric {
namespace {

TEST(TvDistance, Values) {
  EXPECT_NEAR(tv_distance(std::vector<double>(5, 0.2)), 0.0, 1e-16);
  EXPECT_DOUBLE_EQ(tv_distance(std::vector<double>{1.0, 0.0, 0.0, 0.0}), 1.5);
}

TEST(TvDistance, MatchesExtendedPrecisionSum) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 200);
    std::vector<double> p(n);
    double tot = 0.0;
    for (double& v : p) tot += (v = u(rng));
    for (double& v : p) v /= tot;
    long double want = 0.0L;
    for (double v : p) want += std::fabs(static_cast<long double>(v) - 1.0L / n);
    EXPECT_NEAR(tv_distance(p), static_cast<double>(want), 1e-12);
  }
}

Trajectory from_tv(const std::vector<double>& ps) {
  // Two-node distributions (0.5 + x/2, 0.5 - x/2) have distance x.
  Trajectory t;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    t.samples.push_back({{0.5 + ps[i] / 2, 0.5 - ps[i] / 2}, static_cast<double>(i)});
  }
  return t;
}

TEST(MixingTime, UniformStartIsZero) {
  EXPECT_EQ(mixing_time_numeric(from_tv({0.0, 0.0, 0.0}), 0.1), 0.0);
}

TEST(MixingTime, SustainedCrossingRule) {
  // Dips below 0.1 at t=2, comes back above at t=3, settles from t=4.
  const auto t = from_tv({0.3, 0.2, 0.095, 0.104, 0.099, 0.09, 0.08});
  EXPECT_EQ(mixing_time_numeric(t, 0.1), 4.0);
}

TEST(MixingTime, NotReached) {
  EXPECT_FALSE(mixing_time_numeric(from_tv({0.5, 0.4, 0.3}), 0.1).has_value());
  EXPECT_FALSE(mixing_time_numeric(from_tv({0.5, 0.05, 0.3}), 0.1).has_value());
}

TEST(MixingTime, CoarseSamplingRejected) {
  EXPECT_THROW(mixing_time_numeric(from_tv({0.9, 0.05}), 0.1), InvalidArgument);
  EXPECT_THROW(mixing_time_numeric(Trajectory{}, 0.1), InvalidArgument);
  EXPECT_THROW(mixing_time_numeric(from_tv({0.1}), 0.0), InvalidArgument);
  EXPECT_THROW(mixing_time_numeric(from_tv({0.1}), 2.0), InvalidArgument);
}

TEST(Bounds, LowerExact) {
  const LricSpec s(10, 3);
  const double sk = std::pow(std::sin(kPi / 10), 2) + std::pow(std::sin(3 * kPi / 10), 2);
  const auto lb = lower_bound(s, 50.0, 0.01);
  EXPECT_FALSE(lb.clamped);
  EXPECT_NEAR(lb.value, 100.0 * std::log(20.0) / sk, 1e-9);
  EXPECT_NEAR(lb.value, 399.43, 0.01);
}

TEST(Bounds, LowerAsymptoticCycle) {
  const auto lb = lower_bound(LricSpec(10, 0), 50.0, 0.01, true);
  EXPECT_NEAR(lb.value, 10000.0 * std::log(20.0) / (kPi * kPi), 1e-9);
  EXPECT_NEAR(lb.value, 3035.3, 0.1);
}

TEST(Bounds, LowerClampsWhenVacuous) {
  const auto at = lower_bound(LricSpec(10, 3), 50.0, 0.2);
  EXPECT_EQ(at.value, 0.0);
  EXPECT_TRUE(at.clamped);
  const auto above = lower_bound(LricSpec(8, 3), 20.0, 0.5, true);
  EXPECT_EQ(above.value, 0.0);
  EXPECT_TRUE(above.clamped);
}

TEST(Bounds, Upper) {
  EXPECT_NEAR(upper_bound(LricSpec(10, 3), 50.0, 0.01), 250.0 * std::log(201.0), 1e-9);
  EXPECT_NEAR(upper_bound(LricSpec(10, 3), 50.0, 0.01), 1325.9, 0.1);
  EXPECT_NEAR(upper_bound(LricSpec(10, 0), 50.0, 0.01), 2500.0 * std::log(201.0), 1e-8);
}

TEST(Bounds, RejectBadParameters) {
  EXPECT_THROW(lower_bound(LricSpec(10, 3), 0.0, 0.01), InvalidArgument);
  EXPECT_THROW(upper_bound(LricSpec(10, 3), 1.0, -0.01), InvalidArgument);
  EXPECT_THROW(upper_bound(LricSpec(10, 3), INFINITY, 0.01), InvalidArgument);
}

TEST(Bounds, SmallGammaReference) {
  const auto b = small_gamma_reference_bounds(LricSpec(10, 3), 0.01, 0.01);
  EXPECT_TRUE(b.applicable);
  EXPECT_NEAR(b.odd_m, 100.0 * std::log(1000.0) * 10.0 / 8.0, 1e-9);
  EXPECT_NEAR(b.even_m, 100.0 * std::log(1000.0) * 10.0 / 9.0, 1e-9);
  EXPECT_NEAR(b.odd_m, 863.47, 0.01);
  EXPECT_NEAR(b.even_m, 767.53, 0.01);
  EXPECT_FALSE(small_gamma_reference_bounds(LricSpec(10, 3), 2.0, 0.01).applicable);
}

TEST(BoundsProperty, OrderedAndLinearInGamma) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> gd(10.0, 300.0), ed(0.001, 0.05);
  for (int trial = 0; trial < 200; ++trial) {
    const LricSpec s = testing::random_spec(rng, 5, 256);
    const double g = gd(rng), e = ed(rng);
    const auto lo = lower_bound(s, g, e);
    EXPECT_LE(lo.value, upper_bound(s, g, e));
    EXPECT_NEAR(upper_bound(s, 2 * g, e), 2 * upper_bound(s, g, e),
                1e-12 * upper_bound(s, g, e));
    EXPECT_NEAR(lower_bound(s, 2 * g, e).value, 2 * lo.value, 1e-12 * lo.value + 1e-300);
  }
}

TEST(MixingSource, Resolution) {
  EXPECT_EQ(resolve_source(MixingSource::kAuto, LricSpec(16, 5), 100.0),
            MixingSource::kSimulator);
  EXPECT_EQ(resolve_source(MixingSource::kAuto, LricSpec(17, 5), 50.0),
            MixingSource::kAnalytic);
  EXPECT_EQ(resolve_source(MixingSource::kAuto, LricSpec(8, 3), 101.0),
            MixingSource::kAnalytic);
  EXPECT_EQ(resolve_source(MixingSource::kSimulator, LricSpec(64, 5), 500.0),
            MixingSource::kSimulator);
  EXPECT_EQ(to_string(MixingSource::kSimulator), "sim");
  EXPECT_EQ(to_string(MixingSource::kAnalytic), "analytic");
  EXPECT_EQ(to_string(MixingSource::kAuto), "auto");
}

TEST(Sandwich, AnalyticPointInsideBounds) {
  const LricSpec s(10, 3);
  SandwichOptions opt;
  opt.source = MixingSource::kAnalytic;
  const auto r = sandwich_check(s, 50.0, 0.01, default_horizon(s, 50.0, 0.01), opt);
  ASSERT_TRUE(r.t_mix.has_value());
  EXPECT_EQ(r.sandwich_ok, true);
  EXPECT_GT(*r.t_mix, 399.4);
  EXPECT_LT(*r.t_mix, 1325.9);
  EXPECT_EQ(r.source, "analytic");
}

TEST(Sandwich, SimulatorAgreesWithAnalyticWithinOneSample) {
  const LricSpec s(10, 3);
  const double horizon = default_horizon(s, 50.0, 0.01);
  SandwichOptions sim, ana;
  sim.source = MixingSource::kSimulator;
  ana.source = MixingSource::kAnalytic;
  const auto a = sandwich_check(s, 50.0, 0.01, horizon, sim);
  const auto b = sandwich_check(s, 50.0, 0.01, horizon, ana);
  ASSERT_TRUE(a.t_mix && b.t_mix);
  EXPECT_LE(std::abs(*a.t_mix - *b.t_mix), horizon / sim.samples * (1 + 1e-12));
}

TEST(Sandwich, SimulatedPoint) {
  const LricSpec s(8, 3);
  const auto r = sandwich_check(s, 20.0, 0.01, default_horizon(s, 20.0, 0.01));
  EXPECT_EQ(r.source, "sim");
  EXPECT_EQ(r.sandwich_ok, true);
}

// For km > N/2 the small-angle estimate behind the upper bound overstates the
// slowest rate: at N=16, m=5 mode k=3 has weight ~0.347 instead of (pi/N)^2 (1+m^2) ~ 1.
TEST(Sandwich, UpperBoundFailsForWideLinks) {
  const LricSpec s(16, 5);
  double slowest = INFINITY;
  for (int k = 1; k < 16; ++k) slowest = std::min(slowest, mode_weight(s, k));
  EXPECT_NEAR(slowest, mode_weight(s, 3), 1e-15);
  EXPECT_LT(slowest, 0.35);
  EXPECT_GT(std::pow(kPi / 16, 2) * 26, 0.98);

  const double horizon = default_horizon(s, 50.0, 0.005);
  SandwichOptions ana;
  ana.source = MixingSource::kAnalytic;
  const auto sim = sandwich_check(s, 50.0, 0.005, horizon);
  const auto cf = sandwich_check(s, 50.0, 0.005, horizon, ana);
  EXPECT_EQ(sim.source, "sim");
  ASSERT_TRUE(sim.t_mix && cf.t_mix);
  EXPECT_LE(std::abs(*sim.t_mix - *cf.t_mix), horizon / ana.samples * (1 + 1e-12));
  EXPECT_GT(*sim.t_mix, sim.t_lower_exact);
  EXPECT_GT(*sim.t_mix, sim.t_upper);
  EXPECT_EQ(sim.sandwich_ok, false);
}

TEST(Sandwich, ClampedLowerBound) {
  const LricSpec s(8, 3);
  const auto r = sandwich_check(s, 20.0, 0.5, default_horizon(s, 20.0, 0.5));
  EXPECT_TRUE(r.lower_clamped);
  EXPECT_EQ(r.t_lower_exact, 0.0);
  EXPECT_EQ(r.sandwich_ok, true);
}

TEST(Sandwich, ShortHorizonLeavesVerdictUndefined) {
  const LricSpec s(8, 3);
  const auto r = sandwich_check(s, 20.0, 0.01, 10.0);
  EXPECT_FALSE(r.t_mix.has_value());
  EXPECT_FALSE(r.sandwich_ok.has_value());
  EXPECT_GT(r.t_upper, 10.0);
}

TEST(Sandwich, RejectsBadArguments) {
  const LricSpec s(8, 3);
  EXPECT_THROW(sandwich_check(s, 20.0, 2.5, 100.0), InvalidArgument);
  EXPECT_THROW(sandwich_check(s, 20.0, 0.01, -1.0), InvalidArgument);
  SandwichOptions one;
  one.samples = 1;
  EXPECT_THROW(sandwich_check(s, 20.0, 0.01, 100.0, one), InvalidArgument);
}

TEST(Sweep, GridAllInsideBounds) {
  SweepGrid g{{8, 12, 16}, {0, 2, 3}, {20.0, 50.0}, {0.01}, std::nullopt};
  SandwichOptions opt;
  opt.source = MixingSource::kAnalytic;
  const auto rows = run_sweep(g, opt);
  ASSERT_EQ(rows.size(), 18u);
  for (const auto& r : rows) EXPECT_EQ(r.sandwich_ok, true) << r.n << "," << r.m;
  EXPECT_EQ(rows.front().n, 8);
  EXPECT_EQ(rows.front().m, 0);
  EXPECT_EQ(rows.front().gamma, 20.0);
}

TEST(Sweep, ParallelMatchesSerialAndDirectCall) {
  SweepGrid g{{12, 8, 8}, {3, 0}, {50.0}, {0.01, 0.02}, std::nullopt};
  SandwichOptions opt;
  opt.source = MixingSource::kAnalytic;
  const auto a = run_sweep(g, opt);
  const auto b = run_sweep_serial(g, opt);
  ASSERT_EQ(a.size(), 8u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].t_mix, b[i].t_mix);
    EXPECT_EQ(a[i].t_upper, b[i].t_upper);
  }
  const LricSpec s(8, 0);
  const auto d = sandwich_check(s, 50.0, 0.01, default_horizon(s, 50.0, 0.01), opt);
  EXPECT_EQ(a[0].t_mix, d.t_mix);
  EXPECT_EQ(a[0].t_lower_exact, d.t_lower_exact);
  EXPECT_EQ(a[0].t_upper, d.t_upper);
}

TEST(Sweep, EpsilonRangeHoldsForShortLinks) {
  SweepGrid g{{8, 12, 16}, {0, 2, 3}, {50.0}, {0.001, 0.005, 0.02, 0.1, 0.15, 0.2},
              std::nullopt};
  SandwichOptions opt;
  opt.source = MixingSource::kAnalytic;
  int checked = 0;
  for (const auto& r : run_sweep(g, opt)) {
    if (r.epsilon >= 2.0 / r.n) continue;
    ++checked;
    EXPECT_EQ(r.sandwich_ok, true) << r.n << "," << r.m << "," << r.epsilon;
  }
  EXPECT_EQ(checked, 45);
}

TEST(Sweep, FailuresAreRecordedInRow) {
  SweepGrid g{{8}, {1, 3}, {20.0}, {0.01}, std::nullopt};
  SandwichOptions opt;
  opt.source = MixingSource::kAnalytic;
  const auto rows = run_sweep(g, opt);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].source, "failed");
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_EQ(rows[1].sandwich_ok, true);
  EXPECT_THROW(run_sweep(SweepGrid{{}, {3}, {1.0}, {0.1}, std::nullopt}), InvalidArgument);
}

}  // namespace
}  // namespace lric

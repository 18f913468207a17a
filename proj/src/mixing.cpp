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

#include "lric/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "lric/errors.hpp"
#include "lric/large_gamma.hpp"

namespace lric {

namespace {

void check_rate_and_threshold(double gamma, double epsilon) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("gamma must be finite and > 0");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("epsilon must be finite and > 0");
  }
}

double sin_sq(double x) {
  const double s = std::sin(x);
  return s * s;
}

}  // namespace

double tv_distance(std::span<const double> p) {
  if (p.empty()) throw InvalidArgument("tv_distance: empty distribution");
  const double uniform = 1.0 / static_cast<double>(p.size());
  double sum = 0.0;
  for (double v : p) sum += std::abs(v - uniform);
  return sum;
}

std::optional<double> mixing_time_numeric(const Trajectory& traj,
                                          double epsilon) {
  if (traj.samples.empty()) {
    throw InvalidArgument("mixing time of an empty trajectory");
  }
  if (!(epsilon > 0.0 && epsilon < 2.0)) {
    throw InvalidArgument("epsilon must lie in (0, 2)");
  }
  const std::size_t count = traj.samples.size();
  std::vector<double> tv(count);
  for (std::size_t i = 0; i < count; ++i) tv[i] = tv_distance(traj.samples[i].probs);

  // First index of the final run of samples at or below epsilon.
  std::size_t first = count;
  while (first > 0 && tv[first - 1] <= epsilon) --first;
  if (first == count) return std::nullopt;
  if (first > 0 && tv[first - 1] - tv[first] >= epsilon / 10.0) {
    throw InvalidArgument(
        "sampling too coarse: tv drops by more than epsilon/10 across the "
        "crossing at t = " + std::to_string(traj.samples[first].time));
  }
  return traj.samples[first].time;
}

BoundValue lower_bound(const LricSpec& spec, double gamma, double epsilon,
                       bool asymptotic) {
  check_rate_and_threshold(gamma, epsilon);
  const double n = spec.n_nodes();
  const double m = spec.distance_param();
  const double log_term = std::log(2.0 / (n * epsilon));
  if (!(log_term > 0.0)) return {0.0, true};
  if (asymptotic) {
    return {2.0 * gamma * n * n * log_term / (kPi * kPi * (1.0 + m * m)), false};
  }
  return {2.0 * gamma * log_term / (sin_sq(kPi / n) + sin_sq(kPi * m / n)),
          false};
}

double upper_bound(const LricSpec& spec, double gamma, double epsilon) {
  check_rate_and_threshold(gamma, epsilon);
  const double n = spec.n_nodes();
  const double m = spec.distance_param();
  return gamma * n * n * std::log((2.0 + epsilon) / epsilon) /
         (2.0 * (1.0 + m * m));
}

SmallGammaBounds small_gamma_reference_bounds(const LricSpec& spec,
                                              double gamma, double epsilon) {
  check_rate_and_threshold(gamma, epsilon);
  const double n = spec.n_nodes();
  const double base = std::log(n / epsilon) / gamma;
  return {base * n / (n - 2.0), base * n / (n - 1.0), gamma < 1.0};
}

std::string to_string(MixingSource s) {
  switch (s) {
    case MixingSource::kSimulator: return "sim";
    case MixingSource::kAnalytic: return "analytic";
    case MixingSource::kAuto: break;
  }
  return "auto";
}

MixingSource resolve_source(MixingSource requested, const LricSpec& spec,
                            double gamma) {
  if (requested != MixingSource::kAuto) return requested;
  return (gamma <= 100.0 && spec.n_nodes() <= 16) ? MixingSource::kSimulator
                                                  : MixingSource::kAnalytic;
}

double default_horizon(const LricSpec& spec, double gamma, double epsilon) {
  return upper_bound(spec, gamma, epsilon) * 1.1;
}

MixingReport sandwich_check(const LricSpec& spec, double gamma, double epsilon,
                            double horizon, const SandwichOptions& options) {
  check_rate_and_threshold(gamma, epsilon);
  if (!(epsilon < 2.0)) throw InvalidArgument("epsilon must lie in (0, 2)");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw InvalidArgument("horizon must be finite and > 0");
  }
  if (options.samples < 2) throw InvalidArgument("need at least 2 samples");

  MixingReport r;
  r.n = spec.n_nodes();
  r.m = spec.distance_param();
  r.gamma = gamma;
  r.epsilon = epsilon;
  const BoundValue lower = lower_bound(spec, gamma, epsilon, false);
  r.t_lower_exact = lower.value;
  r.lower_clamped = lower.clamped;
  r.t_lower_asymptotic = lower_bound(spec, gamma, epsilon, true).value;
  r.t_upper = upper_bound(spec, gamma, epsilon);
  r.horizon = horizon;

  const MixingSource source = resolve_source(options.source, spec, gamma);
  r.source = to_string(source);
  if (horizon < r.t_upper) return r;  // cannot decide; left undefined

  const double spacing = horizon / options.samples;
  std::vector<double> times(static_cast<std::size_t>(options.samples) + 1);
  for (std::size_t i = 0; i < times.size(); ++i) {
    times[i] = static_cast<double>(i) * spacing;
  }
  const Trajectory traj =
      source == MixingSource::kSimulator
          ? sample_trajectory(DensityMatrix::localized(spec.n_nodes(), 0), spec,
                              gamma, times, options.integrator)
          : analytic_distribution(spec, gamma, times);
  r.t_mix = mixing_time_numeric(traj, epsilon);
  r.sandwich_ok = r.t_mix.has_value() && r.t_lower_exact <= *r.t_mix &&
                  *r.t_mix <= r.t_upper;
  return r;
}

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct SweepPoint {
  int n, m;
  double gamma, epsilon;
};

std::vector<SweepPoint> expand(const SweepGrid& grid) {
  if (grid.n.empty() || grid.m.empty() || grid.gamma.empty() ||
      grid.epsilon.empty()) {
    throw InvalidArgument("sweep grid is empty");
  }
  std::vector<SweepPoint> pts;
  for (int n : sorted_unique(grid.n)) {
    for (int m : sorted_unique(grid.m)) {
      for (double g : sorted_unique(grid.gamma)) {
        for (double e : sorted_unique(grid.epsilon)) pts.push_back({n, m, g, e});
      }
    }
  }
  return pts;
}

MixingReport run_point(const SweepPoint& p, const SweepGrid& grid,
                       const SandwichOptions& options) {
  try {
    const LricSpec spec(p.n, p.m);
    const double horizon =
        grid.horizon ? *grid.horizon : default_horizon(spec, p.gamma, p.epsilon);
    return sandwich_check(spec, p.gamma, p.epsilon, horizon, options);
  } catch (const std::exception& ex) {
    MixingReport r;
    r.n = p.n;
    r.m = p.m;
    r.gamma = p.gamma;
    r.epsilon = p.epsilon;
    r.source = "failed";
    r.error = ex.what();
    return r;
  }
}

}  // namespace

std::vector<MixingReport> run_sweep(const SweepGrid& grid,
                                    const SandwichOptions& options) {
  const auto pts = expand(grid);
  std::vector<MixingReport> rows(pts.size());
  SandwichOptions point_options = options;
  point_options.integrator.parallel_kernel = false;
  const auto count = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) rows[i] = run_point(pts[i], grid, point_options);
  return rows;
}

std::vector<MixingReport> run_sweep_serial(const SweepGrid& grid,
                                           const SandwichOptions& options) {
  const auto pts = expand(grid);
  std::vector<MixingReport> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.push_back(run_point(p, grid, options));
  return rows;
}

}  // namespace lric

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

#include "lric/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "lric/coherent_walk.hpp"
#include "lric/dephasing.hpp"
#include "lric/density_matrix.hpp"
#include "lric/graph.hpp"
#include "lric/large_gamma.hpp"
#include "lric/mixing.hpp"
#include "lric/oracle.hpp"

namespace lric::validation {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

IntegratorSettings settings_for(const ValidationOptions& opt) {
  IntegratorSettings s;
  s.kernel = opt.kernel;
  return s;
}

// Sandwich runs are shared between the mixing criteria.
MixingReport cached_sandwich(const ValidationOptions& opt, int n, int m,
                             double gamma, double eps, MixingSource source) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, double, double, int>, MixingReport> cache;
  const auto key = std::make_tuple(n, m, gamma, eps, static_cast<int>(source));
  const bool cacheable = !opt.kernel;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const LricSpec spec(n, m);
  SandwichOptions so;
  so.source = source;
  so.integrator = settings_for(opt);
  MixingReport r =
      sandwich_check(spec, gamma, eps, default_horizon(spec, gamma, eps), so);
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
  }
  return r;
}

}  // namespace

CheckResult check_spectral(const ValidationOptions& opt) {
  Timer timer;
  std::vector<std::pair<int, int>> specs = {{8, 3}, {10, 4}, {12, 5}, {16, 3}, {6, 0}};
  if (opt.quick) specs = {{8, 3}, {6, 0}};
  double worst = 0.0;
  for (auto [n, m] : specs) {
    const LricSpec spec(n, m);
    auto formula = full_spectrum(spec).eigenvalues;
    std::sort(formula.begin(), formula.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_hamiltonian(spec),
                                                      Eigen::EigenvaluesOnly);
    const Eigen::VectorXd dense = es.eigenvalues();  // ascending
    for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(formula[k] - dense(k)));
  }
  CheckResult r{1, "spectral", false, "", timer.seconds()};
  r.passed = worst <= 1e-10 && r.seconds < 1.0;
  r.detail = "max|E_formula-E_dense|=" + sci(worst) + " <= 1e-10, runtime < 1 s";
  return r;
}

CheckResult check_conservation(const ValidationOptions& opt) {
  Timer timer;
  std::vector<std::pair<int, int>> specs = {{6, 2}, {8, 3}, {10, 4}, {12, 5}, {12, 0}};
  if (opt.quick) specs = {{6, 2}, {8, 3}, {8, 0}};
  double trace_dev = 0.0, herm = 0.0, min_eig = 1.0;
  for (auto [n, m] : specs) {
    const LricSpec spec(n, m);
    for (double gamma : {0.0, 1.0, 10.0, 100.0}) {
      DephasingIntegrator integ(spec, gamma, settings_for(opt));
      DensityMatrix state = DensityMatrix::localized(n, 0);
      for (int t = 1; t <= 50; ++t) {
        integ.advance(state, t);
        trace_dev = std::max(trace_dev, trace_deviation(state.rho));
        herm = std::max(herm, hermiticity_defect(state.rho));
        min_eig = std::min(min_eig, min_eigenvalue(state.rho));
      }
    }
  }
  CheckResult r{2, "conservation", false, "", timer.seconds()};
  r.passed = trace_dev <= 1e-8 && herm <= 1e-9 && min_eig >= -1e-7 &&
             r.seconds < 120.0;
  r.detail = "trace dev=" + sci(trace_dev) + " <= 1e-8, hermiticity=" +
             sci(herm) + " <= 1e-9, min eig=" + sci(min_eig) +
             " >= -1e-7, runtime < 120 s";
  return r;
}

CheckResult check_oracle_equivalence(const ValidationOptions& opt) {
  Timer timer;
  double worst = 0.0;
  for (auto [n, m] : {std::pair{6, 2}, std::pair{8, 3}}) {
    const LricSpec spec(n, m);
    for (double gamma : {5.0, 50.0}) {
      const DensityMatrix rho0 = DensityMatrix::localized(n, 0);
      DephasingIntegrator integ(spec, gamma, settings_for(opt));
      DensityMatrix state = rho0;
      for (double t : {1.0, 10.0, 100.0}) {
        integ.advance(state, t);
        const DensityMatrix exact = oracle::exact_evolve(rho0, spec, gamma, t);
        worst = std::max(worst, (state.rho - exact.rho).cwiseAbs().maxCoeff());
      }
    }
  }
  CheckResult r{3, "oracle-equivalence", false, "", timer.seconds()};
  r.passed = worst <= 1e-6 && r.seconds < 60.0;
  r.detail = "max|sim-exact|=" + sci(worst) + " <= 1e-6, runtime < 60 s";
  return r;
}

CheckResult check_coherent_limit(const ValidationOptions& opt) {
  Timer timer;
  const LricSpec spec = opt.quick ? LricSpec(8, 3) : LricSpec(10, 3);
  const auto times = uniform_times(20.0, 0.5);
  const Trajectory traj = sample_trajectory(
      DensityMatrix::localized(spec.n_nodes(), 0), spec, 0.0, times,
      settings_for(opt));
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    const auto ref = coherent_probabilities(spec, s.time, 0, 0.25);
    for (std::size_t j = 0; j < ref.probs.size(); ++j) {
      worst = std::max(worst, std::abs(ref.probs[j] - s.probs[j]));
    }
  }
  CheckResult r{4, "coherent-limit", false, "", timer.seconds()};
  r.passed = worst <= 1e-6;
  r.detail = "G(" + std::to_string(spec.n_nodes()) + "," +
             std::to_string(spec.distance_param()) +
             ") max|P_sim-P_coherent|=" + sci(worst) + " <= 1e-6";
  return r;
}

CheckResult check_diagonal_sum_decay(const ValidationOptions& opt) {
  Timer timer;
  const LricSpec spec(8, 3);
  const double gamma = 5.0;
  const std::vector<Complex> plus = {1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  const DensityMatrix rho0 = DensityMatrix::pure(plus);
  const double d1_0 = std::abs(diagonal_sums(rho0.rho)[1]);
  DephasingIntegrator integ(spec, gamma, settings_for(opt));
  DensityMatrix state = rho0;
  double worst = 0.0;
  for (double t : {0.1, 0.2, 0.4}) {
    integ.advance(state, t);
    const double ratio = std::abs(diagonal_sums(state.rho)[1]) / d1_0;
    worst = std::max(worst, std::abs(ratio / std::exp(-gamma * t) - 1.0));
  }
  CheckResult r{5, "diagonal-sum-decay", false, "", timer.seconds()};
  r.passed = worst <= 1e-6;
  r.detail = "max rel err |D1(t)|/|D1(0)| vs e^{-gamma t}=" + sci(worst) + " <= 1e-6";
  return r;
}

namespace {

double closed_form_error(const LricSpec& spec, double gamma,
                         const ValidationOptions& opt) {
  const auto times = uniform_times(400.0, 0.5);
  const Trajectory sim = sample_trajectory(
      DensityMatrix::localized(spec.n_nodes(), 0), spec, gamma, times,
      settings_for(opt));
  double worst = 0.0;
  for (const auto& s : sim.samples) {
    const auto a = analytic_populations(spec, gamma, s.time);
    for (std::size_t j = 0; j < a.size(); ++j) {
      worst = std::max(worst, std::abs(a[j] - s.probs[j]));
    }
  }
  return worst;
}

}  // namespace

CheckResult check_large_gamma(const ValidationOptions& opt) {
  Timer timer;
  const LricSpec spec = opt.quick ? LricSpec(8, 3) : LricSpec(10, 3);
  const double err50 = closed_form_error(spec, 50.0, opt);
  const double err100 = closed_form_error(spec, 100.0, opt);
  const double ratio = err50 / err100;
  CheckResult r{6, "large-gamma-closed-form", false, "", timer.seconds()};
  r.passed = err50 <= 5e-3 && ratio >= 2.0;
  r.detail = "max|P_sim-a_j| gamma=50: " + sci(err50) +
             " <= 5e-3; gamma=100: " + sci(err100) + "; ratio " + sci(ratio) +
             " >= 2";
  return r;
}

CheckResult check_sandwich(const ValidationOptions& opt) {
  Timer timer;
  std::vector<int> ns = {8, 12, 16};
  if (opt.quick) ns = {8};
  int ok = 0, total = 0;
  std::string failures;
  for (int n : ns) {
    for (int m : {0, 2, 3}) {
      for (double gamma : {20.0, 50.0}) {
        ++total;
        const MixingReport rep =
            cached_sandwich(opt, n, m, gamma, 0.01, MixingSource::kSimulator);
        if (rep.sandwich_ok.value_or(false)) {
          ++ok;
        } else {
          failures += " G(" + std::to_string(n) + "," + std::to_string(m) +
                      ") gamma=" + sci(gamma) + " t_mix=" +
                      (rep.t_mix ? sci(*rep.t_mix) : std::string("not-reached")) +
                      " [" + sci(rep.t_lower_exact) + "," + sci(rep.t_upper) + "]";
        }
      }
    }
  }
  CheckResult r{7, "mixing-sandwich", false, "", timer.seconds()};
  r.passed = ok == total && r.seconds < 600.0;
  r.detail = std::to_string(ok) + "/" + std::to_string(total) +
             " points with T_lower <= T_mix <= T_upper, runtime < 600 s" + failures;
  return r;
}

CheckResult check_gamma_proportionality(const ValidationOptions& opt) {
  Timer timer;
  const int n = opt.quick ? 8 : 10;
  const int m = 3;
  const double eps = 0.01;
  double analytic_dev = 0.0;
  bool reached = true;
  for (double gamma : {25.0, 50.0}) {
    const auto a = cached_sandwich(opt, n, m, gamma, eps, MixingSource::kAnalytic);
    const auto b = cached_sandwich(opt, n, m, 2 * gamma, eps, MixingSource::kAnalytic);
    if (!a.t_mix || !b.t_mix) {
      reached = false;
      continue;
    }
    analytic_dev = std::max(analytic_dev, std::abs(*b.t_mix / (2.0 * *a.t_mix) - 1.0));
  }
  const auto s25 = cached_sandwich(opt, n, m, 25.0, eps, MixingSource::kSimulator);
  const auto s50 = cached_sandwich(opt, n, m, 50.0, eps, MixingSource::kSimulator);
  double sim_dev = 1.0;
  if (s25.t_mix && s50.t_mix) {
    sim_dev = std::abs(*s50.t_mix / (2.0 * *s25.t_mix) - 1.0);
  } else {
    reached = false;
  }
  CheckResult r{8, "gamma-proportionality", false, "", timer.seconds()};
  r.passed = reached && analytic_dev <= 1e-6 && sim_dev <= 0.15;
  r.detail = "closed form |T(2g)/2T(g)-1|=" + sci(analytic_dev) +
             " <= 1e-6; simulator=" + sci(sim_dev) + " <= 0.15";
  return r;
}

CheckResult check_m_dependence(const ValidationOptions& opt) {
  Timer timer;
  const int n = opt.quick ? 8 : 16;
  std::vector<int> ms = {0, 2, 3, 4};
  if (opt.quick) ms = {0, 2, 3};
  const double gamma = 50.0, eps = 0.01;
  bool bounds_decrease = true, tmix_nonincreasing = true;
  std::string values;
  double prev_lower = 0.0, prev_asym = 0.0, prev_upper = 0.0, prev_t = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const LricSpec spec(n, ms[i]);
    const double lower = lower_bound(spec, gamma, eps, false).value;
    const double asym = lower_bound(spec, gamma, eps, true).value;
    const double upper = upper_bound(spec, gamma, eps);
    const auto rep = cached_sandwich(opt, n, ms[i], gamma, eps, MixingSource::kSimulator);
    const double t = rep.t_mix.value_or(INFINITY);
    if (i > 0) {
      bounds_decrease = bounds_decrease && lower < prev_lower && asym < prev_asym &&
                        upper < prev_upper;
      tmix_nonincreasing = tmix_nonincreasing && t <= prev_t;
    }
    prev_lower = lower;
    prev_asym = asym;
    prev_upper = upper;
    prev_t = t;
    values += " m=" + std::to_string(ms[i]) + ":" + sci(t);
  }
  CheckResult r{9, "m-dependence", false, "", timer.seconds()};
  r.passed = bounds_decrease && tmix_nonincreasing;
  r.detail = std::string("bounds strictly decreasing: ") +
             (bounds_decrease ? "yes" : "no") + "; T_mix non-increasing: " +
             (tmix_nonincreasing ? "yes" : "no") + ";" + values;
  return r;
}

CheckResult check_cycle_reduction(const ValidationOptions&) {
  Timer timer;
  double worst = 0.0;
  for (int n : {8, 10, 16, 64}) {
    const LricSpec spec(n, 0);
    for (double gamma : {10.0, 50.0, 200.0}) {
      for (double eps : {0.001, 0.01}) {
        const double nn = n;
        const double lower41 =
            2.0 * gamma * nn * nn / (kPi * kPi) * std::log(2.0 / (nn * eps));
        const double upper46 = gamma * nn * nn / 2.0 * std::log((2.0 + eps) / eps);
        const double s = std::sin(kPi / nn);
        const double lower39 = 2.0 * gamma / (s * s) * std::log(2.0 / (nn * eps));
        const auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
        worst = std::max(worst, rel(lower_bound(spec, gamma, eps, true).value, lower41));
        worst = std::max(worst, rel(upper_bound(spec, gamma, eps), upper46));
        worst = std::max(worst, rel(lower_bound(spec, gamma, eps, false).value, lower39));
      }
    }
  }
  CheckResult r{10, "cycle-reduction", false, "", timer.seconds()};
  r.passed = worst <= 1e-12;
  r.detail = "max rel diff vs direct cycle formulas=" + sci(worst) + " <= 1e-12";
  return r;
}

std::vector<CheckResult> run_all(
    const ValidationOptions& opt,
    const std::function<void(const CheckResult&)>& on_result) {
  using Check = CheckResult (*)(const ValidationOptions&);
  const Check checks[] = {check_spectral,           check_conservation,
                          check_oracle_equivalence, check_coherent_limit,
                          check_diagonal_sum_decay, check_large_gamma,
                          check_sandwich,           check_gamma_proportionality,
                          check_m_dependence,       check_cycle_reduction};
  std::vector<CheckResult> results;
  for (Check c : checks) {
    CheckResult r;
    try {
      r = c(opt);
    } catch (const std::exception& ex) {
      r.id = static_cast<int>(results.size()) + 1;
      r.name = "check";
      r.passed = false;
      r.detail = std::string("threw: ") + ex.what();
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CheckResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof(secs), "%.2f", r.seconds);
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << "  "
     << r.detail << "  (" << secs << " s)";
  return os.str();
}

}  // namespace lric::validation

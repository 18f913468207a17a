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

#include "lric/large_gamma.hpp"

#include <cmath>
#include <string>

#include "lric/errors.hpp"

namespace lric {

namespace {

void require_positive_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("large-gamma closed form needs finite gamma > 0");
  }
}

// omega^{p} with the exponent reduced mod N first.
Complex root_of_unity(long p, int n) {
  const long r = ((p % n) + n) % n;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / n);
}

// Inverse DFT with the 1/N convention: x_j = (1/N) sum_k X_k omega^{jk}.
std::vector<Complex> inverse_dft(const std::vector<Complex>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      acc += coeffs[k] * root_of_unity(static_cast<long>(j) * k, n);
    }
    out[j] = acc / static_cast<double>(n);
  }
  return out;
}

void check_node(const LricSpec& spec, int node) {
  if (node < 0 || node >= spec.n_nodes()) {
    throw InvalidArgument("node " + std::to_string(node) + " outside [0, N)");
  }
}

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("time must be finite and >= 0");
  }
}

}  // namespace

double mode_weight(const LricSpec& spec, int k) {
  const int n = spec.n_nodes();
  const double s1 = std::sin(kPi * k / n);
  // k m reduced mod N; sin^2 has period pi so this is exact in the math.
  const long km = (static_cast<long>(k) * spec.distance_param()) % n;
  const double s2 = spec.is_cycle() ? 0.0 : std::sin(kPi * km / n);
  return s1 * s1 + s2 * s2;
}

ModeRates mode_rates(const LricSpec& spec, double gamma) {
  require_positive_gamma(gamma);
  ModeRates r;
  r.gamma = gamma;
  r.modes.reserve(spec.n_nodes());
  for (int k = 0; k < spec.n_nodes(); ++k) {
    ModeRate mr;
    mr.slow = mode_weight(spec, k) / (2.0 * gamma);
    mr.fast = gamma - mr.slow;
    mr.zero = 0.0;
    mr.dephase = gamma;
    r.modes.push_back(mr);
  }
  return r;
}

ModeCoefficients mode_coefficients(const LricSpec& spec, double gamma) {
  require_positive_gamma(gamma);
  const int n = spec.n_nodes();
  const int m = spec.distance_param();
  const Complex i{0.0, 1.0};
  ModeCoefficients c;
  c.gamma = gamma;
  c.modes.reserve(n);
  for (int k = 0; k < n; ++k) {
    ModeCoefficient mc;
    mc.a = {Complex{1.0, 0.0}, Complex{-mode_weight(spec, k) / (2.0 * gamma * gamma), 0.0},
            Complex{0.0, 0.0}};

    const double x = kPi * k / n;
    const Complex bond = i * std::sin(x) * std::polar(1.0, x);
    mc.d = {bond / gamma, -bond / gamma, bond / (gamma * gamma)};

    if (!spec.is_cycle()) {
      const long km = (static_cast<long>(k) * m) % (2L * n);
      const double y = kPi * static_cast<double>(km) / n;
      const Complex lr = i * std::sin(y) * std::polar(1.0, y);
      mc.f = {lr / gamma, -lr / gamma, lr / (gamma * gamma)};
    }
    c.modes.push_back(mc);
  }
  return c;
}

std::vector<double> analytic_populations(const LricSpec& spec, double gamma,
                                         double t) {
  check_time(t);
  const ModeRates rates = mode_rates(spec, gamma);
  std::vector<Complex> coeffs;
  coeffs.reserve(rates.modes.size());
  for (const auto& mr : rates.modes) coeffs.emplace_back(std::exp(-mr.slow * t), 0.0);
  const auto a = inverse_dft(coeffs);
  std::vector<double> p;
  p.reserve(a.size());
  for (const auto& v : a) {
    // slow_k = slow_{N-k}, so the sum is real up to rounding.
    if (std::abs(v.imag()) > 1e-12) {
      throw std::logic_error("closed-form population has imaginary part " +
                             std::to_string(v.imag()));
    }
    p.push_back(v.real());
  }
  return p;
}

double analytic_probability(const LricSpec& spec, double gamma, double t,
                            int node) {
  check_node(spec, node);
  return analytic_populations(spec, gamma, t)[node];
}

BondAmplitudes analytic_offdiagonals(const LricSpec& spec, double gamma,
                                     double t) {
  check_time(t);
  const ModeRates rates = mode_rates(spec, gamma);
  const ModeCoefficients coeffs = mode_coefficients(spec, gamma);
  const int n = spec.n_nodes();
  std::vector<Complex> dk(n), fk(n);
  for (int k = 0; k < n; ++k) {
    const auto& mr = rates.modes[k];
    const std::array<double, 3> decay = {std::exp(-mr.slow * t),
                                         std::exp(-mr.fast * t),
                                         std::exp(-mr.dephase * t)};
    const auto& mc = coeffs.modes[k];
    for (int b = 0; b < 3; ++b) {
      dk[k] += mc.d[b] * decay[b];
      fk[k] += mc.f[b] * decay[b];
    }
  }
  return {inverse_dft(dk), inverse_dft(fk)};
}

ComplexMatrix analytic_density(const LricSpec& spec, double gamma, double t) {
  const int n = spec.n_nodes();
  const auto pops = analytic_populations(spec, gamma, t);
  const auto bonds = analytic_offdiagonals(spec, gamma, t);
  const Complex minus_half_i{0.0, -0.5};
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    rho(j, j) = pops[j];
    const int r1 = (j + 1) % n;
    rho(j, r1) = minus_half_i * bonds.d[j];
    rho(r1, j) = std::conj(rho(j, r1));
    if (!spec.is_cycle()) {
      const int rm = (j + spec.distance_param()) % n;
      rho(j, rm) = minus_half_i * bonds.f[j];
      rho(rm, j) = std::conj(rho(j, rm));
    }
  }
  return rho;
}

Trajectory analytic_distribution(const LricSpec& spec, double gamma,
                                 std::span<const double> times) {
  require_positive_gamma(gamma);
  Trajectory traj;
  traj.metadata = {spec.n_nodes(), spec.distance_param(), gamma,
                   kAnalyticSourceId, 0.0, gamma < kLargeGammaRegime};
  traj.samples.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw InvalidArgument("sample times must be strictly increasing");
    }
    traj.samples.push_back({analytic_populations(spec, gamma, times[i]), times[i]});
  }
  return traj;
}

}  // namespace lric

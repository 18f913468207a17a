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

#include "lric/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lric/errors.hpp"

namespace lric {

ComplexMatrix master_rhs(const ComplexMatrix& rho, const LricSpec& spec,
                         double gamma) {
  const int n = spec.n_nodes();
  if (rho.rows() != n || rho.cols() != n) {
    throw InvalidArgument("master_rhs: density matrix is " +
                          std::to_string(rho.rows()) + "x" +
                          std::to_string(rho.cols()) + ", graph has N = " +
                          std::to_string(n));
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("master_rhs: gamma must be finite and >= 0");
  }
  ComplexMatrix out;
  kernels::coherent_commutator_serial(spec, rho, out);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j != k) out(j, k) -= gamma * rho(j, k);
    }
  }
  return out;
}

namespace {

struct Phi {
  double p1, p2, p3;
};

// phi_k(z) = sum_n z^n / (n + k)!, real z <= 0.
Phi phi_functions(double z) {
  if (std::abs(z) < 0.5) {
    Phi p{0.0, 0.0, 0.0};
    double term1 = 1.0, term2 = 0.5, term3 = 1.0 / 6.0;
    for (int n = 0; n < 24; ++n) {
      p.p1 += term1;
      p.p2 += term2;
      p.p3 += term3;
      term1 *= z / (n + 2);
      term2 *= z / (n + 3);
      term3 *= z / (n + 4);
    }
    return p;
  }
  const double e = std::expm1(z);
  return {e / z, (e - z) / (z * z), (e - z - 0.5 * z * z) / (z * z * z)};
}

// dst = cu * u + cv * v, with separate coefficients on the diagonal.
void combine(ComplexMatrix& dst, const double cu[2], const ComplexMatrix& u,
             const double cv[2], const ComplexMatrix& v) {
  dst.resize(u.rows(), u.cols());
  dst.array() = cu[1] * u.array() + cv[1] * v.array();
  for (Eigen::Index j = 0; j < dst.rows(); ++j) {
    dst(j, j) = cu[0] * u(j, j) + cv[0] * v(j, j);
  }
}

bool state_is_sane(const ComplexMatrix& u) {
  if (!u.allFinite()) return false;
  // |rho_jk| <= sqrt(rho_jj rho_kk) <= 1 for any density matrix.
  return u.cwiseAbs().maxCoeff() <= 1.0 + 1e-6;
}

}  // namespace

DephasingIntegrator::DephasingIntegrator(LricSpec spec, double gamma,
                                         IntegratorSettings settings)
    : spec_(spec), gamma_(gamma), settings_(std::move(settings)) {
  if (!(gamma_ >= 0.0) || !std::isfinite(gamma_)) {
    throw InvalidArgument("gamma must be finite and >= 0");
  }
  if (!(settings_.dt > 0.0) || !std::isfinite(settings_.dt)) {
    throw InvalidArgument("integrator step dt must be positive");
  }
  if (settings_.warmup_refinement < 1 || !(settings_.warmup_time >= 0.0)) {
    throw InvalidArgument("warm-up settings must be non-negative");
  }
}

DephasingIntegrator::Coefficients DephasingIntegrator::coefficients_for(
    double h) const {
  Coefficients c;
  c.h = h;
  const double zs[2] = {0.0, -gamma_ * h};
  for (int i = 0; i < 2; ++i) {
    const double z = zs[i];
    const Phi full = phi_functions(z);
    const Phi half = phi_functions(0.5 * z);
    c.e_full[i] = std::exp(z);
    c.e_half[i] = std::exp(0.5 * z);
    c.half_phi1[i] = 0.5 * h * half.p1;
    c.w_u[i] = h * (full.p1 - 3.0 * full.p2 + 4.0 * full.p3);
    c.w_ab[i] = h * (2.0 * full.p2 - 4.0 * full.p3);
    c.w_c[i] = h * (4.0 * full.p3 - full.p2);
  }
  return c;
}

void DephasingIntegrator::apply_kernel(const ComplexMatrix& in,
                                       ComplexMatrix& out) {
  if (settings_.kernel) {
    settings_.kernel(spec_, in, out);
  } else if (settings_.parallel_kernel) {
    kernels::coherent_commutator_omp(spec_, in, out);
  } else {
    kernels::coherent_commutator_serial(spec_, in, out);
  }
}

void DephasingIntegrator::step(ComplexMatrix& u, const Coefficients& c) {
  apply_kernel(u, nu_);
  combine(a_, c.e_half, u, c.half_phi1, nu_);
  apply_kernel(a_, na_);
  combine(b_, c.e_half, u, c.half_phi1, na_);
  apply_kernel(b_, nb_);
  // Stage c: e_half * a + half_phi1 * (2 Nb - Nu). b_ is free after Nb.
  b_.array() = 2.0 * nb_.array() - nu_.array();
  combine(c_, c.e_half, a_, c.half_phi1, b_);
  apply_kernel(c_, nc_);

  na_ += nb_;
  const Eigen::Index n = u.rows();
  diag_.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    diag_(j) = c.e_full[0] * u(j, j) + c.w_u[0] * nu_(j, j) +
               c.w_ab[0] * na_(j, j) + c.w_c[0] * nc_(j, j);
  }
  u.array() = c.e_full[1] * u.array() + c.w_u[1] * nu_.array() +
              c.w_ab[1] * na_.array() + c.w_c[1] * nc_.array();
  for (Eigen::Index j = 0; j < n; ++j) u(j, j) = diag_(j);
}

void DephasingIntegrator::integrate_segment(DensityMatrix& state, double t_end,
                                            double h_nominal) {
  const double t0 = state.time;
  const double len = t_end - t0;
  if (len <= 0.0) return;
  const auto steps = static_cast<long>(
      std::max(1.0, std::ceil(len / h_nominal - 1e-9)));
  const Coefficients c = coefficients_for(len / static_cast<double>(steps));
  for (long i = 0; i < steps; ++i) {
    step(state.rho, c);
    if ((i & 15) == 15 || i + 1 == steps) {
      if (!state_is_sane(state.rho)) {
        const double reached = t0 + c.h * static_cast<double>(i + 1);
        std::ostringstream msg;
        msg << "integrator diverged at t = " << reached << " (dt = " << c.h
            << ", gamma = " << gamma_ << ")";
        state.time = reached;
        throw IntegratorFailure(msg.str(), reached);
      }
    }
  }
  state.time = t_end;
}

void DephasingIntegrator::advance(DensityMatrix& state, double t_target) {
  if (state.dim() != spec_.n_nodes() || state.rho.cols() != spec_.n_nodes()) {
    throw InvalidArgument("density matrix dimension does not match the graph");
  }
  if (!std::isfinite(t_target) || t_target < state.time) {
    throw InvalidArgument("cannot integrate backwards or to a non-finite time");
  }
  const double warm_end = origin_ + settings_.warmup_time;
  if (state.time < warm_end) {
    integrate_segment(state, std::min(t_target, warm_end),
                      settings_.dt / settings_.warmup_refinement);
  }
  integrate_segment(state, t_target, settings_.dt);
}

DensityMatrix evolve(const DensityMatrix& rho0, const LricSpec& spec,
                     double gamma, double t_final,
                     const IntegratorSettings& settings) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw InvalidArgument("evolve: t_final must be finite and >= 0");
  }
  DephasingIntegrator integrator(spec, gamma, settings);
  integrator.set_origin(rho0.time);
  DensityMatrix state = rho0;
  integrator.advance(state, rho0.time + t_final);
  return state;
}

Trajectory sample_trajectory(const DensityMatrix& rho0, const LricSpec& spec,
                             double gamma, std::span<const double> times,
                             const IntegratorSettings& settings) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || !std::isfinite(times[i])) {
      throw InvalidArgument("sample times must be finite and >= 0");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw InvalidArgument("sample times must be strictly increasing");
    }
  }
  DephasingIntegrator integrator(spec, gamma, settings);
  DensityMatrix state = rho0;
  state.time = 0.0;
  integrator.set_origin(0.0);

  Trajectory traj;
  traj.metadata = {spec.n_nodes(), spec.distance_param(), gamma, kIntegratorId,
                   settings.dt, false};
  traj.samples.reserve(times.size());
  for (double t : times) {
    integrator.advance(state, t);
    traj.samples.push_back({state.populations(), t});
  }
  return traj;
}

std::vector<double> uniform_times(double t_max, double sample_dt) {
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw InvalidArgument("t_max must be finite and >= 0");
  }
  if (t_max == 0.0) return {0.0};
  if (!(sample_dt > 0.0)) throw InvalidArgument("sample spacing must be > 0");
  const auto count = static_cast<long>(std::floor(t_max / sample_dt + 1e-9));
  std::vector<double> times;
  times.reserve(count + 2);
  for (long i = 0; i <= count; ++i) times.push_back(sample_dt * static_cast<double>(i));
  if (t_max - times.back() > 1e-9 * t_max) times.push_back(t_max);
  return times;
}

}  // namespace lric

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

#include "lric/graph.hpp"

#include <cmath>

#include "lric/errors.hpp"

namespace lric {

LricSpec::LricSpec(int n_nodes, int distance_param)
    : n_(n_nodes), m_(distance_param) {
  if (auto reason = check(n_nodes, distance_param)) {
    throw InvalidSpec(*reason);
  }
}

std::optional<std::string> LricSpec::check(int n, int m) {
  const std::string tag =
      "G(" + std::to_string(n) + ", " + std::to_string(m) + "): ";
  if (n < 3) return tag + "need at least 3 nodes";
  if (n > kMaxNodes) {
    return tag + "at most " + std::to_string(kMaxNodes) +
           " nodes (dense storage)";
  }
  if (m < 0) return tag + "distance parameter must be non-negative";
  if (m == 0) return std::nullopt;
  if (m == 1) {
    return tag + "m = 1 duplicates the cycle bonds; use m = 0 for the cycle";
  }
  if (2 * m == n) {
    return tag + "m = N/2 gives degree-3 nodes; need 2 <= m < N/2";
  }
  if (2 * m > n) return tag + "need 2 <= m < N/2";
  return std::nullopt;
}

std::vector<int> LricSpec::neighbor_offsets() const {
  if (is_cycle()) return {1, n_ - 1};
  return {1, n_ - 1, m_, n_ - m_};
}

RealMatrix build_hamiltonian(const LricSpec& spec) {
  const int n = spec.n_nodes();
  RealMatrix h = RealMatrix::Zero(n, n);
  const auto offsets = spec.neighbor_offsets();
  for (int i = 0; i < n; ++i) {
    h(i, i) = -static_cast<double>(spec.degree());
    for (int o : offsets) h(i, (i + o) % n) = 1.0;
  }
  return h;
}

double mode_angle(const LricSpec& spec, int n) {
  if (n < 0 || n >= spec.n_nodes()) {
    throw InvalidArgument("mode index " + std::to_string(n) +
                          " outside [0, N)");
  }
  return 2.0 * kPi * n / spec.n_nodes();
}

double eigenvalue(const LricSpec& spec, int n) {
  const double theta = mode_angle(spec, n);
  if (spec.is_cycle()) return -2.0 + 2.0 * std::cos(theta);
  return -4.0 + 2.0 * std::cos(theta) +
         2.0 * std::cos(spec.distance_param() * theta);
}

Spectrum full_spectrum(const LricSpec& spec) {
  Spectrum s;
  const int n = spec.n_nodes();
  s.eigenvalues.reserve(n);
  s.mode_angles.reserve(n);
  for (int k = 0; k < n; ++k) {
    s.mode_angles.push_back(mode_angle(spec, k));
    s.eigenvalues.push_back(eigenvalue(spec, k));
  }
  return s;
}

}  // namespace lric

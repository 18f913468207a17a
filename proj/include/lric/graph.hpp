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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lric/types.hpp"

namespace lric {

/// Largest graph the dense representations are meant for.
inline constexpr int kMaxNodes = 256;

/// G(N, m): an N-cycle with extra bonds between every pair of nodes at cyclic
/// distance m. m = 0 selects the plain cycle.
///
/// Valid specs are either m = 0 with N >= 3 (cycle mode, degree 2) or
/// 2 <= m < N/2 (interacting mode, degree 4). m = 1 would double the cycle
/// bonds and m = N/2 leaves degree-3 nodes; both are rejected.
class LricSpec {
 public:
  /// Throws InvalidSpec with an explanatory message.
  LricSpec(int n_nodes, int distance_param);

  /// The reason (N, m) is invalid, or nullopt when it is valid.
  static std::optional<std::string> check(int n_nodes, int distance_param);

  int n_nodes() const noexcept { return n_; }
  int distance_param() const noexcept { return m_; }
  bool is_cycle() const noexcept { return m_ == 0; }
  int degree() const noexcept { return is_cycle() ? 2 : 4; }

  /// Cyclic offsets (mod N) of the neighbours of any node: {1, N-1} in cycle
  /// mode, {1, N-1, m, N-m} otherwise.
  std::vector<int> neighbor_offsets() const;

  friend bool operator==(const LricSpec&, const LricSpec&) = default;

 private:
  int n_;
  int m_;
};

/// H = A - D: -degree on the diagonal, 1 for each bond. Real, symmetric,
/// circulant, zero row sums.
RealMatrix build_hamiltonian(const LricSpec& spec);

/// theta_n = 2 pi n / N.
double mode_angle(const LricSpec& spec, int n);

/// Bloch-state energy -4 + 2 cos(theta) + 2 cos(m theta), or -2 + 2 cos(theta)
/// for the cycle.
double eigenvalue(const LricSpec& spec, int n);

struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<double> mode_angles;
};

Spectrum full_spectrum(const LricSpec& spec);

}  // namespace lric

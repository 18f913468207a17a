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

#include "lric/coherent_walk.hpp"

#include <cmath>
#include <string>

#include "lric/errors.hpp"

namespace lric {

std::vector<Complex> coherent_amplitudes(const LricSpec& spec, double t,
                                         int start, double scale) {
  const int n = spec.n_nodes();
  if (start < 0 || start >= n) {
    throw InvalidArgument("start node " + std::to_string(start) +
                          " outside [0, N)");
  }
  if (!(scale > 0.0)) throw InvalidArgument("scale must be positive");

  std::vector<Complex> phase(n);
  for (int k = 0; k < n; ++k) {
    phase[k] = std::polar(1.0, -scale * eigenvalue(spec, k) * t);
  }
  std::vector<Complex> amp(n);
  for (int j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    const int shift = ((j - start) % n + n) % n;
    for (int k = 0; k < n; ++k) {
      // (k * shift) mod N keeps the twiddle angle small.
      const int r = static_cast<int>((static_cast<long>(k) * shift) % n);
      acc += phase[k] * std::polar(1.0, 2.0 * kPi * r / n);
    }
    amp[j] = acc / static_cast<double>(n);
  }
  return amp;
}

ProbabilityVector coherent_probabilities(const LricSpec& spec, double t,
                                         int start, double scale) {
  const auto amp = coherent_amplitudes(spec, t, start, scale);
  ProbabilityVector p;
  p.time = t;
  p.probs.reserve(amp.size());
  for (const auto& a : amp) p.probs.push_back(std::norm(a));
  return p;
}

bool is_probability_vector(std::span<const double> p, double tol) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

}  // namespace lric

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

#include <functional>
#include <string>
#include <vector>

#include "lric/kernels.hpp"

namespace lric::validation {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Human-readable measured values against their tolerances.
  std::string detail;
  double seconds = 0.0;
};

struct ValidationOptions {
  /// Restrict to N <= 8.
  bool quick = false;
  /// Coherent kernel handed to the simulator; empty uses the built-in one.
  /// Test fixtures inject mutated kernels here.
  kernels::CoherentKernel kernel;
};

CheckResult check_spectral(const ValidationOptions& opt);
CheckResult check_conservation(const ValidationOptions& opt);
CheckResult check_oracle_equivalence(const ValidationOptions& opt);
CheckResult check_coherent_limit(const ValidationOptions& opt);
CheckResult check_diagonal_sum_decay(const ValidationOptions& opt);
CheckResult check_large_gamma(const ValidationOptions& opt);
CheckResult check_sandwich(const ValidationOptions& opt);
CheckResult check_gamma_proportionality(const ValidationOptions& opt);
CheckResult check_m_dependence(const ValidationOptions& opt);
CheckResult check_cycle_reduction(const ValidationOptions& opt);

/// Runs every check in order, reporting each as it finishes.
std::vector<CheckResult> run_all(
    const ValidationOptions& opt,
    const std::function<void(const CheckResult&)>& on_result = {});

/// "[PASS] 3 oracle-equivalence  max|sim-exact|=2.1e-07 <= 1e-06  (0.41 s)"
std::string format_line(const CheckResult& r);

}  // namespace lric::validation

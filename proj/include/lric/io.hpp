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

#include <iosfwd>
#include <span>
#include <string>

#include "lric/dephasing.hpp"
#include "lric/graph.hpp"
#include "lric/mixing.hpp"

namespace lric::io {

/// Shortest decimal string that round-trips to the same double (at most 17
/// significant digits). Locale independent.
std::string format_number(double v);

/// Header `t,node,probability`, one row per sample per node.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// {"metadata": {n, m, gamma, integrator, dt[, out_of_regime]},
///  "samples": [{"t": ..., "probabilities": [...]}, ...]}
void write_trajectory_json(std::ostream& os, const Trajectory& traj);

/// Parses the CSV schema above. Metadata is not part of the CSV and is left
/// default-initialized apart from n.
Trajectory read_trajectory_csv(std::istream& is);

/// Header `n,m,gamma,epsilon,t_mix,t_lower_exact,t_lower_asym,t_upper,sandwich_ok,source`.
void write_sweep_csv(std::ostream& os, std::span<const MixingReport> rows);

/// Header `n,theta,energy`.
void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum);
/// [{"n": .., "theta": .., "energy": ..}, ...]
void write_spectrum_json(std::ostream& os, const Spectrum& spectrum);

}  // namespace lric::io

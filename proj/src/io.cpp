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

#include "lric/io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "lric/errors.hpp"

namespace lric::io {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number failed");
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,node,probability\n";
  for (const auto& s : traj.samples) {
    const std::string t = format_number(s.time);
    for (std::size_t j = 0; j < s.probs.size(); ++j) {
      os << t << ',' << j << ',' << format_number(s.probs[j]) << '\n';
    }
  }
}

void write_trajectory_json(std::ostream& os, const Trajectory& traj) {
  using nlohmann::ordered_json;
  const auto& md = traj.metadata;
  ordered_json meta;
  meta["n"] = md.n;
  meta["m"] = md.m;
  meta["gamma"] = md.gamma;
  meta["integrator"] = md.integrator;
  if (md.dt > 0.0) {
    meta["dt"] = md.dt;
  } else {
    meta["dt"] = nullptr;
  }
  if (md.out_of_regime) meta["out_of_regime"] = true;

  ordered_json samples = ordered_json::array();
  for (const auto& s : traj.samples) {
    ordered_json row;
    row["t"] = s.time;
    row["probabilities"] = s.probs;
    samples.push_back(std::move(row));
  }
  ordered_json doc;
  doc["metadata"] = std::move(meta);
  doc["samples"] = std::move(samples);
  os << doc.dump(2) << '\n';
}

namespace {

double parse_double(const std::string& field) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw InvalidArgument("not a number: '" + field + "'");
  }
  return v;
}

}  // namespace

Trajectory read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "t,node,probability") {
    throw InvalidArgument("trajectory CSV: missing header");
  }
  Trajectory traj;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string t, node, p;
    if (!std::getline(row, t, ',') || !std::getline(row, node, ',') ||
        !std::getline(row, p)) {
      throw InvalidArgument("trajectory CSV: malformed row '" + line + "'");
    }
    const double time = parse_double(t);
    const auto j = static_cast<std::size_t>(parse_double(node));
    if (traj.samples.empty() || traj.samples.back().time != time) {
      traj.samples.push_back({{}, time});
    }
    auto& probs = traj.samples.back().probs;
    if (j != probs.size()) throw InvalidArgument("trajectory CSV: nodes out of order");
    probs.push_back(parse_double(p));
  }
  if (!traj.samples.empty()) {
    traj.metadata.n = static_cast<int>(traj.samples.front().probs.size());
  }
  return traj;
}

void write_sweep_csv(std::ostream& os, std::span<const MixingReport> rows) {
  os << "n,m,gamma,epsilon,t_mix,t_lower_exact,t_lower_asym,t_upper,"
        "sandwich_ok,source\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.m << ',' << format_number(r.gamma) << ','
       << format_number(r.epsilon) << ',';
    if (r.source == "failed") {
      os << ",,,,undefined,failed\n";
      continue;
    }
    os << (r.t_mix ? format_number(*r.t_mix) : std::string("not-reached")) << ','
       << format_number(r.t_lower_exact) << ','
       << format_number(r.t_lower_asymptotic) << ','
       << format_number(r.t_upper) << ','
       << (r.sandwich_ok ? (*r.sandwich_ok ? "true" : "false") : "undefined")
       << ',' << r.source << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum) {
  os << "n,theta,energy\n";
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    os << k << ',' << format_number(spectrum.mode_angles[k]) << ','
       << format_number(spectrum.eigenvalues[k]) << '\n';
  }
}

void write_spectrum_json(std::ostream& os, const Spectrum& spectrum) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    arr.push_back({{"n", k},
                   {"theta", spectrum.mode_angles[k]},
                   {"energy", spectrum.eigenvalues[k]}});
  }
  os << arr.dump(2) << '\n';
}

}  // namespace lric::io

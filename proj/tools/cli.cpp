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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lric/dephasing.hpp"
#include "lric/errors.hpp"
#include "lric/graph.hpp"
#include "lric/io.hpp"
#include "lric/large_gamma.hpp"
#include "lric/mixing.hpp"
#include "lric/validation.hpp"

namespace lric::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

template <typename T>
T parse_scalar(const std::string& s) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto range = split(item, ':');
    if (range.size() == 1) {
      out.push_back(parse_scalar<T>(range[0]));
    } else if (range.size() == 3) {
      const T lo = parse_scalar<T>(range[0]);
      const T hi = parse_scalar<T>(range[1]);
      const T step = parse_scalar<T>(range[2]);
      if (!(step > 0)) throw std::invalid_argument("range step must be > 0");
      const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
      for (long i = 0; i <= count; ++i) out.push_back(static_cast<T>(lo + step * i));
    } else {
      throw std::invalid_argument("bad list item '" + item + "'");
    }
  }
  return out;
}

// Flat `key = value` lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) +
                            ": expected key = value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

// Writes through to `fallback` for "" / "-", otherwise to a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InvalidArgument("cannot open output file " + path);
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

struct RunConfig {
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  double t_max = 10.0;
  double dt = IntegratorSettings{}.dt;
  double sample_dt = 0.0;  // 0: t_max / 200
  int start = 0;
  std::string output;
  std::string format = "csv";
  bool quick = false;

  // mixing-sweep
  std::string n_list, m_list, gamma_list, epsilon_list;
  std::string source = "auto";
  std::string config_path;
  double horizon = 0.0;  // 0: default per point
  int samples = SandwichOptions{}.samples;
};

LricSpec make_spec(const RunConfig& c) {
  if (auto reason = LricSpec::check(c.n, c.m)) throw InvalidSpec(*reason);
  return LricSpec(c.n, c.m);
}

std::vector<double> sample_grid(const RunConfig& c) {
  if (!(c.t_max >= 0.0) || !std::isfinite(c.t_max)) {
    throw InvalidArgument("--t-max must be finite and >= 0");
  }
  const double spacing = c.sample_dt > 0.0 ? c.sample_dt : c.t_max / 200.0;
  return uniform_times(c.t_max, spacing);
}

void write_trajectory(const Trajectory& traj, const RunConfig& c,
                      std::ostream& out) {
  // Render fully before touching the destination so failures leave no file.
  std::ostringstream buf;
  if (c.format == "json") {
    io::write_trajectory_json(buf, traj);
  } else {
    io::write_trajectory_csv(buf, traj);
  }
  Sink sink(c.output, out);
  sink.stream() << buf.str();
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const LricSpec spec = make_spec(c);
  std::ostringstream buf;
  const Spectrum s = full_spectrum(spec);
  if (c.format == "json") {
    io::write_spectrum_json(buf, s);
  } else {
    io::write_spectrum_csv(buf, s);
  }
  Sink sink(c.output, out);
  sink.stream() << buf.str();
  return kOk;
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
  const LricSpec spec = make_spec(c);
  if (!(c.gamma >= 0.0) || !std::isfinite(c.gamma)) {
    throw InvalidArgument("--gamma must be finite and >= 0");
  }
  if (c.start < 0 || c.start >= spec.n_nodes()) {
    throw InvalidArgument("--start must lie in [0, N)");
  }
  if (!(c.dt > 0.0)) throw InvalidArgument("--dt must be > 0");
  const auto times = sample_grid(c);
  IntegratorSettings settings;
  settings.dt = c.dt;
  settings.parallel_kernel = true;
  const Trajectory traj = sample_trajectory(
      DensityMatrix::localized(spec.n_nodes(), c.start), spec, c.gamma, times,
      settings);
  write_trajectory(traj, c, out);
  return kOk;
}

int cmd_analytic(const RunConfig& c, std::ostream& out) {
  const LricSpec spec = make_spec(c);
  if (!(c.gamma > 0.0) || !std::isfinite(c.gamma)) {
    throw InvalidArgument("--gamma must be finite and > 0 for the closed form");
  }
  if (c.start < 0 || c.start >= spec.n_nodes()) {
    throw InvalidArgument("--start must lie in [0, N)");
  }
  Trajectory traj = analytic_distribution(spec, c.gamma, sample_grid(c));
  if (c.start != 0) {
    const int n = spec.n_nodes();
    for (auto& s : traj.samples) {
      std::vector<double> shifted(n);
      for (int j = 0; j < n; ++j) shifted[(j + c.start) % n] = s.probs[j];
      s.probs = std::move(shifted);
    }
  }
  write_trajectory(traj, c, out);
  return kOk;
}

MixingSource parse_source(const std::string& s) {
  if (s == "auto") return MixingSource::kAuto;
  if (s == "sim") return MixingSource::kSimulator;
  if (s == "analytic") return MixingSource::kAnalytic;
  throw InvalidArgument("--source must be auto, sim or analytic");
}

int cmd_mixing_sweep(RunConfig c, const CLI::App& sub, std::ostream& out,
                     std::ostream& err) {
  if (!c.config_path.empty()) {
    const auto kv = read_config(c.config_path);
    const auto given = [&](const char* flag) { return sub.count(flag) > 0; };
    for (const auto& [key, value] : kv) {
      if (key == "n") { if (!given("--n")) c.n_list = value; }
      else if (key == "m") { if (!given("--m")) c.m_list = value; }
      else if (key == "gamma") { if (!given("--gamma")) c.gamma_list = value; }
      else if (key == "epsilon") { if (!given("--epsilon")) c.epsilon_list = value; }
      else if (key == "source") { if (!given("--source")) c.source = value; }
      else if (key == "horizon") { if (!given("--horizon")) c.horizon = parse_scalar<double>(value); }
      else if (key == "samples") { if (!given("--samples")) c.samples = parse_scalar<int>(value); }
      else if (key == "dt") { if (!given("--dt")) c.dt = parse_scalar<double>(value); }
      else if (key == "output") { if (!given("--output")) c.output = value; }
      else throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
  SweepGrid grid;
  grid.n = parse_int_list(c.n_list);
  grid.m = parse_int_list(c.m_list);
  grid.gamma = parse_double_list(c.gamma_list);
  grid.epsilon = parse_double_list(c.epsilon_list);
  if (grid.n.empty() || grid.m.empty() || grid.gamma.empty() || grid.epsilon.empty()) {
    throw InvalidArgument("sweep grid is empty: give --n, --m, --gamma and --epsilon");
  }
  if (c.horizon > 0.0) grid.horizon = c.horizon;
  if (!(c.dt > 0.0)) throw InvalidArgument("--dt must be > 0");
  if (c.samples < 2) throw InvalidArgument("--samples must be >= 2");

  SandwichOptions options;
  options.source = parse_source(c.source);
  options.samples = c.samples;
  options.integrator.dt = c.dt;

  const auto rows = run_sweep(grid, options);
  std::ostringstream buf;
  io::write_sweep_csv(buf, rows);
  Sink sink(c.output, out);
  sink.stream() << buf.str();

  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (r.source == "failed") {
      ++failed;
      err << "point n=" << r.n << " m=" << r.m << " gamma=" << r.gamma
          << " epsilon=" << r.epsilon << " failed: " << r.error << '\n';
    }
  }
  return failed == rows.size() ? kSweepFailed : kOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  validation::ValidationOptions opt;
  opt.quick = c.quick;
  bool all = true;
  validation::run_all(opt, [&](const validation::CheckResult& r) {
    out << validation::format_line(r) << std::endl;
    all = all && r.passed;
  });
  out << (all ? "all checks passed" : "validation FAILED") << '\n';
  return all ? kOk : kValidationFailed;
}

void add_spec_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n", c.n, "number of nodes N")->required();
  sub->add_option("--m", c.m, "long-range distance m (0 = plain cycle)")->required();
}

void add_output_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--output", c.output, "output file (default stdout)");
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_time_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--gamma", c.gamma, "dephasing rate")->required();
  sub->add_option("--t-max", c.t_max, "final time");
  sub->add_option("--sample-dt", c.sample_dt, "spacing of output samples (default t-max/200)");
  sub->add_option("--start", c.start, "initial node");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  return parse_list<int>(text);
}

std::vector<double> parse_double_list(const std::string& text) {
  return parse_list<double>(text);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-time quantum walks on long-range interacting cycles "
               "under dephasing"};
  app.require_subcommand(1);
  RunConfig c;

  auto* spectrum = app.add_subcommand("spectrum", "Bloch energies of G(N, m)");
  add_spec_flags(spectrum, c);
  add_output_flags(spectrum, c);

  auto* simulate = app.add_subcommand("simulate", "integrate the dephasing master equation");
  add_spec_flags(simulate, c);
  add_time_flags(simulate, c);
  add_output_flags(simulate, c);
  simulate->add_option("--dt", c.dt, "integrator step");

  auto* analytic = app.add_subcommand("analytic", "large-gamma closed-form distribution");
  add_spec_flags(analytic, c);
  add_time_flags(analytic, c);
  add_output_flags(analytic, c);

  auto* sweep = app.add_subcommand("mixing-sweep", "mixing times and bounds over a grid");
  sweep->add_option("--n", c.n_list, "node counts, e.g. 8,12,16 or 8:16:4");
  sweep->add_option("--m", c.m_list, "distance parameters");
  sweep->add_option("--gamma", c.gamma_list, "dephasing rates");
  sweep->add_option("--epsilon", c.epsilon_list, "mixing thresholds");
  sweep->add_option("--source", c.source, "auto, sim or analytic")
      ->check(CLI::IsMember({"auto", "sim", "analytic"}));
  sweep->add_option("--horizon", c.horizon, "simulated time per point (default 1.1 x upper bound)");
  sweep->add_option("--samples", c.samples, "samples per trajectory");
  sweep->add_option("--dt", c.dt, "integrator step");
  sweep->add_option("--config", c.config_path, "key = value file; flags take precedence");
  sweep->add_option("--output", c.output, "output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "run the acceptance checks");
  validate->add_flag("--quick", c.quick, "N <= 8 subset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << e.what() << '\n';
    return kBadParameters;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(c, out);
    if (simulate->parsed()) return cmd_simulate(c, out);
    if (analytic->parsed()) return cmd_analytic(c, out);
    if (sweep->parsed()) return cmd_mixing_sweep(c, *sweep, out, err);
    if (validate->parsed()) return cmd_validate(c, out);
  } catch (const IntegratorFailure& e) {
    err << "integrator failure: " << e.what() << '\n';
    return kIntegratorFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  }
  return kBadParameters;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("lric");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lric::cli

// Copyright 2026 The grover-noise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment harness for Grover search under Kraus-form noise. Emits
// machine-readable tables: rerun budgets (pmin), success-probability
// curves (sweep), and maximal tolerable noise levels (threshold).

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsim/cli.hpp"
#include "qsim/state.hpp"

namespace {

constexpr int kExitInvalidConfig = 2;
constexpr int kExitValidationFailure = 3;

struct RawOptions {
  std::string qubits;
  std::string family = "all";
  double confidence = 0.95;
  std::string grid = "0:1:0.01";
  double resolution = 1e-4;
  long long marked = -1;
  std::string format = "csv";
  std::string output;
};

void add_common_flags(CLI::App& cmd, RawOptions& opts,
                      const std::string& default_qubits) {
  opts.qubits = default_qubits;
  cmd.add_option("--qubits", opts.qubits,
                 "Qubit range, e.g. 6 or 4..8 (within 1..12)")
      ->capture_default_str();
  cmd.add_option("--confidence", opts.confidence,
                 "Target confidence C in (0,1)")
      ->capture_default_str();
  cmd.add_option("--format", opts.format, "Output format: csv or json")
      ->capture_default_str();
  cmd.add_option("--output", opts.output,
                 "Output path (default: standard output)");
}

void add_family_flag(CLI::App& cmd, RawOptions& opts) {
  cmd.add_option("--family", opts.family,
                 "Noise family name or `all` (depolarizing, "
                 "amplitude-damping, phase-damping, bit-flip, phase-flip, "
                 "bit-phase-flip)")
      ->capture_default_str();
}

void add_marked_flag(CLI::App& cmd, RawOptions& opts) {
  cmd.add_option("--marked", opts.marked,
                 "Marked element index (default: 2^(n-1) per size)");
}

qsim::ExperimentConfig build_config(const RawOptions& opts) {
  qsim::ExperimentConfig config;

  const auto range = qsim::parse_qubit_range(opts.qubits);
  if (!range) {
    throw qsim::ConfigError("cannot parse --qubits value '" + opts.qubits +
                            "'");
  }
  config.min_qubits = range->first;
  config.max_qubits = range->second;

  if (opts.family == "all") {
    config.families.assign(qsim::kAllNoiseKinds.begin(),
                           qsim::kAllNoiseKinds.end());
  } else {
    const auto kind = qsim::noise_kind_from_string(opts.family);
    if (!kind) {
      throw qsim::ConfigError("unknown noise family '" + opts.family + "'");
    }
    config.families = {*kind};
  }

  config.confidence = opts.confidence;

  const auto grid = qsim::parse_alpha_grid(opts.grid);
  if (!grid) {
    throw qsim::ConfigError("cannot parse --alpha-grid value '" + opts.grid +
                            "' (expected start:stop:step)");
  }
  config.grid_start = grid->start;
  config.grid_stop = grid->stop;
  config.grid_step = grid->step;

  config.resolution = opts.resolution;
  if (opts.marked >= 0) {
    config.marked = static_cast<std::size_t>(opts.marked);
  }

  if (opts.format == "csv") {
    config.format = qsim::OutputFormat::kCsv;
  } else if (opts.format == "json") {
    config.format = qsim::OutputFormat::kJson;
  } else {
    throw qsim::ConfigError("unknown output format '" + opts.format + "'");
  }
  return config;
}

int emit(const RawOptions& opts,
         const std::function<void(const qsim::ExperimentConfig&,
                                  std::ostream&)>& command) {
  const qsim::ExperimentConfig config = build_config(opts);
  if (opts.output.empty()) {
    command(config, std::cout);
    return 0;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) {
    throw qsim::ConfigError("cannot open output file '" + opts.output + "'");
  }
  command(config, file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "grover-noise: density-matrix simulation of Grover search under six "
      "one-qubit Kraus noise families"};
  app.require_subcommand(1);

  RawOptions pmin_opts;
  CLI::App* pmin = app.add_subcommand(
      "pmin", "Rerun budget k and success threshold p_min per size");
  add_common_flags(*pmin, pmin_opts, "3..8");

  RawOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Success probability as a function of the noise parameter");
  add_common_flags(*sweep, sweep_opts, "6");
  add_family_flag(*sweep, sweep_opts);
  add_marked_flag(*sweep, sweep_opts);
  sweep->add_option("--alpha-grid", sweep_opts.grid,
                    "Noise parameter grid start:stop:step")
      ->capture_default_str();

  RawOptions threshold_opts;
  CLI::App* threshold = app.add_subcommand(
      "threshold", "Maximal tolerable noise parameter per (size, family)");
  add_common_flags(*threshold, threshold_opts, "4..8");
  add_family_flag(*threshold, threshold_opts);
  add_marked_flag(*threshold, threshold_opts);
  threshold->add_option("--resolution", threshold_opts.resolution,
                        "Threshold location accuracy")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (pmin->parsed()) return emit(pmin_opts, qsim::run_pmin);
    if (sweep->parsed()) return emit(sweep_opts, qsim::run_sweep);
    return emit(threshold_opts, qsim::run_threshold);
  } catch (const qsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const qsim::ValidationError& e) {
    std::cerr << "numerical validation failure: " << e.what() << '\n';
    return kExitValidationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
}

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

#ifndef QSIM_CLI_HPP_
#define QSIM_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsim/channel.hpp"

namespace qsim {

/// Invalid experiment configuration; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { kCsv, kJson };

/// Shared configuration of the pmin / sweep / threshold subcommands.
struct ExperimentConfig {
  int min_qubits = 3;
  int max_qubits = 8;
  std::vector<NoiseKind> families{kAllNoiseKinds.begin(),
                                  kAllNoiseKinds.end()};
  double confidence = 0.95;
  double grid_start = 0.0;
  double grid_stop = 1.0;
  double grid_step = 0.01;
  double resolution = 1e-4;
  std::optional<std::size_t> marked;  // default: 2^(n-1) per size
  OutputFormat format = OutputFormat::kCsv;
};

/// Throws ConfigError unless the qubit range lies in [1, 12], the grid and
/// resolution are positive and within [0, 1], the confidence lies in
/// (0, 1), and any marked override addresses every size in the range.
void validate_config(const ExperimentConfig& config);

/// The alpha grid start:stop:step, inclusive of `stop` when it lands on a
/// step boundary (0:1:0.01 yields 101 points).
std::vector<double> alpha_grid(const ExperimentConfig& config);

/// Fixed output formatting for all emitted numbers: 6 significant digits,
/// lowercase scientific notation only below 1e-4. Locked by golden-file
/// tests -- identical configs must produce byte-identical output.
std::string format_number(double value);

// Flag-argument parsers. Empty optional means unparseable.
std::optional<std::pair<int, int>> parse_qubit_range(std::string_view text);
struct AlphaGridSpec {
  double start, stop, step;
};
std::optional<AlphaGridSpec> parse_alpha_grid(std::string_view text);

/// Table I data: one row (n, N, k, p_min, confidence) per size.
void run_pmin(const ExperimentConfig& config, std::ostream& out);

/// Fig. 2 data: one row per (n, family, alpha) with success probability.
void run_sweep(const ExperimentConfig& config, std::ostream& out);

/// Table II data: one row per (n, family) with the maximal tolerable
/// alpha and a status of ok / never-competitive / non-monotone-warning.
void run_threshold(const ExperimentConfig& config, std::ostream& out);

}  // namespace qsim

#endif  // QSIM_CLI_HPP_

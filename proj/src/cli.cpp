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

#include "qsim/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qsim/analysis.hpp"
#include "qsim/grover.hpp"

namespace qsim {

namespace {

// One output record. Field order is fixed: n,N,family,alpha,p,p_min,k,
// confidence,status. Unset fields are empty in CSV and absent in JSON.
struct OutputRow {
  std::optional<int> n;
  std::optional<std::size_t> space_size;
  std::optional<std::string> family;
  std::optional<double> alpha;
  std::optional<double> probability;
  std::optional<double> p_min;
  std::optional<int> reruns;
  std::optional<double> confidence;
  std::optional<std::string> status;
};

constexpr std::string_view kCsvHeader =
    "n,N,family,alpha,p,p_min,k,confidence,status";

void write_csv(const std::vector<OutputRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const OutputRow& row : rows) {
    if (row.n) out << *row.n;
    out << ',';
    if (row.space_size) out << *row.space_size;
    out << ',';
    if (row.family) out << *row.family;
    out << ',';
    if (row.alpha) out << format_number(*row.alpha);
    out << ',';
    if (row.probability) out << format_number(*row.probability);
    out << ',';
    if (row.p_min) out << format_number(*row.p_min);
    out << ',';
    if (row.reruns) out << *row.reruns;
    out << ',';
    if (row.confidence) out << format_number(*row.confidence);
    out << ',';
    if (row.status) out << *row.status;
    out << '\n';
  }
}

// JSON carries the same values as CSV: doubles are rounded through
// format_number so both formats agree to 6 significant digits.
double rounded(double value) {
  return std::stod(format_number(value));
}

void write_json(const std::vector<OutputRow>& rows, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const OutputRow& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    if (row.n) obj["n"] = *row.n;
    if (row.space_size) obj["N"] = *row.space_size;
    if (row.family) obj["family"] = *row.family;
    if (row.alpha) obj["alpha"] = rounded(*row.alpha);
    if (row.probability) obj["p"] = rounded(*row.probability);
    if (row.p_min) obj["p_min"] = rounded(*row.p_min);
    if (row.reruns) obj["k"] = *row.reruns;
    if (row.confidence) obj["confidence"] = rounded(*row.confidence);
    if (row.status) obj["status"] = *row.status;
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write_rows(const ExperimentConfig& config,
                const std::vector<OutputRow>& rows, std::ostream& out) {
  if (config.format == OutputFormat::kCsv) {
    write_csv(rows, out);
  } else {
    write_json(rows, out);
  }
}

}  // namespace

void validate_config(const ExperimentConfig& config) {
  if (config.min_qubits < 1 || config.max_qubits > 12 ||
      config.min_qubits > config.max_qubits) {
    throw ConfigError("qubit range must lie within [1, 12] with min <= max");
  }
  if (config.families.empty()) {
    throw ConfigError("at least one noise family is required");
  }
  if (!(config.confidence > 0.0 && config.confidence < 1.0)) {
    throw ConfigError("confidence must lie in (0, 1)");
  }
  if (!(config.grid_step > 0.0)) {
    throw ConfigError("alpha grid step must be > 0");
  }
  if (config.grid_start < 0.0 || config.grid_stop > 1.0 ||
      config.grid_start > config.grid_stop) {
    throw ConfigError("alpha grid must satisfy 0 <= start <= stop <= 1");
  }
  if (!(config.resolution > 0.0)) {
    throw ConfigError("threshold resolution must be > 0");
  }
  if (config.marked) {
    const std::size_t smallest = std::size_t{1} << config.min_qubits;
    if (*config.marked >= smallest) {
      throw ConfigError(
          "marked index must be valid for every size in the qubit range");
    }
  }
}

std::vector<double> alpha_grid(const ExperimentConfig& config) {
  const double span = config.grid_stop - config.grid_start;
  const auto count =
      static_cast<std::size_t>(std::floor(span / config.grid_step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double alpha =
        config.grid_start + static_cast<double>(i) * config.grid_step;
    grid.push_back(std::min(alpha, config.grid_stop));
  }
  return grid;
}

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

std::optional<std::pair<int, int>> parse_qubit_range(std::string_view text) {
  auto parse_int = [](std::string_view s, int& out) {
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
  };
  const std::size_t dots = text.find("..");
  int lo = 0, hi = 0;
  if (dots == std::string_view::npos) {
    if (!parse_int(text, lo)) return std::nullopt;
    return std::pair{lo, lo};
  }
  if (!parse_int(text.substr(0, dots), lo) ||
      !parse_int(text.substr(dots + 2), hi)) {
    return std::nullopt;
  }
  return std::pair{lo, hi};
}

std::optional<AlphaGridSpec> parse_alpha_grid(std::string_view text) {
  const std::size_t first = text.find(':');
  if (first == std::string_view::npos) return std::nullopt;
  const std::size_t second = text.find(':', first + 1);
  if (second == std::string_view::npos) return std::nullopt;
  try {
    AlphaGridSpec spec{};
    spec.start = std::stod(std::string(text.substr(0, first)));
    spec.stop =
        std::stod(std::string(text.substr(first + 1, second - first - 1)));
    spec.step = std::stod(std::string(text.substr(second + 1)));
    return spec;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void run_pmin(const ExperimentConfig& config, std::ostream& out) {
  validate_config(config);
  std::vector<OutputRow> rows;
  for (int n = config.min_qubits; n <= config.max_qubits; ++n) {
    const ComplexityBudget budget = complexity_budget(n, config.confidence);
    OutputRow row;
    row.n = n;
    row.space_size = budget.space_size;
    row.reruns = budget.reruns;
    row.p_min = budget.p_min;
    row.confidence = config.confidence;
    rows.push_back(std::move(row));
  }
  write_rows(config, rows, out);
}

void run_sweep(const ExperimentConfig& config, std::ostream& out) {
  validate_config(config);
  const std::vector<double> grid = alpha_grid(config);
  std::vector<OutputRow> rows;
  for (int n = config.min_qubits; n <= config.max_qubits; ++n) {
    const ComplexityBudget budget = complexity_budget(n, config.confidence);
    for (NoiseKind kind : config.families) {
      const SweepResult result =
          sweep(n, kind, config.confidence, grid, config.marked);
      for (const SweepPoint& point : result.points) {
        OutputRow row;
        row.n = n;
        row.space_size = budget.space_size;
        row.family = std::string(to_string(kind));
        row.alpha = point.alpha;
        row.probability = point.probability;
        row.p_min = budget.p_min;
        row.reruns = budget.reruns;
        row.confidence = config.confidence;
        rows.push_back(std::move(row));
      }
    }
  }
  write_rows(config, rows, out);
}

void run_threshold(const ExperimentConfig& config, std::ostream& out) {
  validate_config(config);
  std::vector<OutputRow> rows;
  for (int n = config.min_qubits; n <= config.max_qubits; ++n) {
    const ComplexityBudget budget = complexity_budget(n, config.confidence);
    for (NoiseKind kind : config.families) {
      const ThresholdResult result = alpha_threshold(
          n, kind, config.confidence, config.resolution, config.marked);
      OutputRow row;
      row.n = n;
      row.space_size = budget.space_size;
      row.family = std::string(to_string(kind));
      row.alpha = result.alpha;
      row.p_min = result.p_min;
      row.reruns = budget.reruns;
      row.confidence = config.confidence;
      row.status = std::string(to_string(result.status));
      rows.push_back(std::move(row));
    }
  }
  write_rows(config, rows, out);
}

}  // namespace qsim

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

#ifndef QSIM_ANALYSIS_HPP_
#define QSIM_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qsim/channel.hpp"

namespace qsim {

/// Rerun accounting for one search-space size N: the classical baseline is
/// N/2 expected oracle calls, a quantum run costs floor(pi/4 sqrt(N)), and
/// `reruns` is how many quantum repetitions still beat that baseline.
struct ComplexityBudget {
  std::size_t space_size = 0;
  int reruns = 0;
  double confidence = 0.0;
  /// Smallest per-run success probability reaching `confidence` within
  /// `reruns` repetitions; absent when reruns == 0 (quantum search is never
  /// competitive at this size).
  std::optional<double> p_min;
};

/// k = floor((N/2) / ((pi/4) sqrt(N))), the maximal number of single runs
/// for which quantum searching is faster than classical.
int rerun_budget(std::size_t space_size);

/// Closed form of min_p {1 - (1-p)^k >= C}: p_min = 1 - (1-C)^(1/k).
/// Throws std::invalid_argument when reruns < 1 or C is outside (0, 1).
double p_min(int reruns, double confidence);

ComplexityBudget complexity_budget(int num_qubits, double confidence);

enum class ThresholdStatus {
  kOk,
  kNeverCompetitive,    // already below p_min at alpha = 0
  kNonMonotoneWarning,  // p(alpha) rose somewhere on the coarse grid
};

std::string_view to_string(ThresholdStatus status);

/// Outcome of the maximal-tolerable-noise search for one (size, family).
struct ThresholdResult {
  std::optional<double> alpha;  // absent when never competitive
  std::optional<double> p_min;
  ThresholdStatus status = ThresholdStatus::kOk;
};

struct SweepPoint {
  double alpha;
  double probability;
};

/// One success-probability curve p(alpha) plus the derived threshold.
struct SweepResult {
  NoiseKind kind;
  int num_qubits;
  double confidence;
  std::vector<SweepPoint> points;  // sorted by alpha ascending
  std::optional<double> threshold_alpha;
  std::optional<double> p_min;
  ThresholdStatus status = ThresholdStatus::kOk;
};

/// Evaluates run_noisy on every alpha of the (sorted, nonempty) grid and
/// attaches the alpha_threshold result. Grid points are independent and
/// evaluated in parallel; point order follows the grid regardless of
/// completion order. `marked` defaults to 2^(n-1).
SweepResult sweep(int num_qubits, NoiseKind kind, double confidence,
                  std::span<const double> alphas,
                  std::optional<std::size_t> marked = std::nullopt);

/// Largest alpha with run_noisy(alpha) >= p_min: coarse scan of [0, 1] in
/// steps of 0.005, then bisection of the bracketing interval down to
/// `resolution`. Monotone decay of p(alpha) is checked on the coarse grid
/// rather than assumed; when a rise is detected the threshold is taken at
/// the FIRST downward crossing of p_min and the result carries
/// kNonMonotoneWarning.
ThresholdResult alpha_threshold(int num_qubits, NoiseKind kind,
                                double confidence, double resolution = 1e-4,
                                std::optional<std::size_t> marked =
                                    std::nullopt);

}  // namespace qsim

#endif  // QSIM_ANALYSIS_HPP_

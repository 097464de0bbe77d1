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

#include "qsim/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qsim/grover.hpp"

namespace qsim {

namespace {

constexpr double kCoarseStep = 0.005;

// A rise this small over one 0.005 step is still a genuine analytic rise
// (several curves have a shallow minimum before alpha = 1), so keep the
// detection epsilon at numerical-noise scale.
constexpr double kMonotoneEpsilon = 1e-9;

// Evaluates run_noisy for each alpha, in parallel, with results placed by
// grid index so the output order never depends on scheduling.
std::vector<double> evaluate_probabilities(int num_qubits, NoiseKind kind,
                                           std::size_t marked,
                                           std::span<const double> alphas) {
  std::vector<double> probabilities(alphas.size());
  const GroverInstance inst(num_qubits, marked);

  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, hw), alphas.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      probabilities[i] = run_noisy(inst, NoiseFamily(kind, alphas[i]));
    }
    return probabilities;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= alphas.size()) return;
      try {
        probabilities[i] = run_noisy(inst, NoiseFamily(kind, alphas[i]));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return probabilities;
}

std::vector<double> coarse_grid() {
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::lround(1.0 / kCoarseStep));
  grid.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    grid.push_back(std::min(1.0, static_cast<double>(i) * kCoarseStep));
  }
  return grid;
}

bool has_rise(std::span<const double> probabilities) {
  for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
    if (probabilities[i + 1] > probabilities[i] + kMonotoneEpsilon) {
      return true;
    }
  }
  return false;
}

}  // namespace

int rerun_budget(std::size_t space_size) {
  if (space_size < 2) {
    throw std::invalid_argument("rerun_budget: search space must be >= 2");
  }
  const double n = static_cast<double>(space_size);
  const double per_run = std::numbers::pi / 4.0 * std::sqrt(n);
  return static_cast<int>(std::floor((n / 2.0) / per_run));
}

double p_min(int reruns, double confidence) {
  if (reruns < 1) {
    throw std::invalid_argument(
        "p_min: rerun budget is zero; quantum search is never competitive "
        "at this size");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("p_min: confidence must lie in (0, 1)");
  }
  return 1.0 - std::pow(1.0 - confidence, 1.0 / reruns);
}

ComplexityBudget complexity_budget(int num_qubits, double confidence) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("complexity_budget: qubit count out of range");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument(
        "complexity_budget: confidence must lie in (0, 1)");
  }
  ComplexityBudget budget;
  budget.space_size = std::size_t{1} << num_qubits;
  budget.reruns = rerun_budget(budget.space_size);
  budget.confidence = confidence;
  if (budget.reruns >= 1) {
    budget.p_min = p_min(budget.reruns, confidence);
  }
  return budget;
}

std::string_view to_string(ThresholdStatus status) {
  switch (status) {
    case ThresholdStatus::kOk:
      return "ok";
    case ThresholdStatus::kNeverCompetitive:
      return "never-competitive";
    case ThresholdStatus::kNonMonotoneWarning:
      return "non-monotone-warning";
  }
  throw std::invalid_argument("unknown ThresholdStatus");
}

SweepResult sweep(int num_qubits, NoiseKind kind, double confidence,
                  std::span<const double> alphas,
                  std::optional<std::size_t> marked) {
  if (alphas.empty()) {
    throw std::invalid_argument("sweep: alpha grid must be nonempty");
  }
  if (!std::is_sorted(alphas.begin(), alphas.end())) {
    throw std::invalid_argument("sweep: alpha grid must be sorted");
  }
  const std::size_t xi =
      marked.value_or(GroverInstance::default_marked(num_qubits));

  SweepResult result;
  result.kind = kind;
  result.num_qubits = num_qubits;
  result.confidence = confidence;

  const std::vector<double> probabilities =
      evaluate_probabilities(num_qubits, kind, xi, alphas);
  result.points.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    result.points.push_back({alphas[i], probabilities[i]});
  }

  const ThresholdResult threshold =
      alpha_threshold(num_qubits, kind, confidence, 1e-4, marked);
  result.threshold_alpha = threshold.alpha;
  result.p_min = threshold.p_min;
  result.status = threshold.status;
  return result;
}

ThresholdResult alpha_threshold(int num_qubits, NoiseKind kind,
                                double confidence, double resolution,
                                std::optional<std::size_t> marked) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("alpha_threshold: resolution must be > 0");
  }
  const std::size_t xi =
      marked.value_or(GroverInstance::default_marked(num_qubits));
  const ComplexityBudget budget = complexity_budget(num_qubits, confidence);

  ThresholdResult result;
  result.p_min = budget.p_min;
  if (!budget.p_min) {
    result.status = ThresholdStatus::kNeverCompetitive;
    return result;
  }
  const double threshold_p = *budget.p_min;

  const GroverInstance inst(num_qubits, xi);
  if (run_noisy(inst, NoiseFamily(kind, 0.0)) < threshold_p) {
    result.status = ThresholdStatus::kNeverCompetitive;
    return result;
  }

  const std::vector<double> grid = coarse_grid();
  const std::vector<double> probabilities =
      evaluate_probabilities(num_qubits, kind, xi, grid);
  result.status = has_rise(probabilities) ? ThresholdStatus::kNonMonotoneWarning
                                          : ThresholdStatus::kOk;

  // First downward crossing of p_min on the coarse grid. Curves can rise
  // back above p_min at large alpha; the first crossing is the one the
  // rerun analysis cares about.
  std::size_t cross = grid.size();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (probabilities[i] >= threshold_p &&
        probabilities[i + 1] < threshold_p) {
      cross = i;
      break;
    }
  }
  if (cross == grid.size()) {
    // Never drops below p_min on the scanned grid.
    result.alpha = grid.back();
    return result;
  }

  double lo = grid[cross];
  double hi = grid[cross + 1];
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (run_noisy(inst, NoiseFamily(kind, mid)) >= threshold_p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.alpha = lo;
  return result;
}

}  // namespace qsim

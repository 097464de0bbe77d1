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

// Acceptance suite: every run prints one [PASS]/[FAIL] line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsim/analysis.hpp"
#include "qsim/cli.hpp"
#include "qsim/grover.hpp"
#include "qsim/state.hpp"

using qsim::GroverInstance;
using qsim::NoiseFamily;
using qsim::NoiseKind;

namespace {

#define ACCEPT(ok, cond)                         \
  do {                                           \
    const bool accept_pass_ = (cond);            \
    CHECK(accept_pass_);                         \
    (ok) = (ok) && accept_pass_;                 \
  } while (0)

void report(int criterion, const char* title, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              title);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

// Table II of the reference results: maximal alpha at C=0.95, by family,
// for N = 2^4 .. 2^8.
double paper_threshold(NoiseKind kind, int num_qubits) {
  const int i = num_qubits - 4;
  switch (kind) {
    case NoiseKind::kDepolarizing: {
      constexpr double v[] = {0.025, 0.032, 0.031, 0.026, 0.020};
      return v[i];
    }
    case NoiseKind::kAmplitudeDamping: {
      constexpr double v[] = {0.069, 0.010, 0.104, 0.094, 0.075};
      return v[i];
    }
    case NoiseKind::kPhaseDamping: {
      constexpr double v[] = {0.177, 0.204, 0.190, 0.158, 0.122};
      return v[i];
    }
    case NoiseKind::kBitFlip: {
      constexpr double v[] = {0.025, 0.032, 0.031, 0.026, 0.020};
      return v[i];
    }
    case NoiseKind::kPhaseFlip: {
      constexpr double v[] = {0.047, 0.054, 0.050, 0.041, 0.031};
      return v[i];
    }
    case NoiseKind::kBitPhaseFlip: {
      constexpr double v[] = {0.018, 0.024, 0.023, 0.020, 0.015};
      return v[i];
    }
  }
  return 0.0;
}

struct ThresholdEntry {
  int num_qubits;
  NoiseKind kind;
  std::optional<double> alpha;
};

struct ThresholdTable {
  std::vector<ThresholdEntry> entries;
  double wall_seconds = 0.0;

  std::optional<double> at(int num_qubits, NoiseKind kind) const {
    for (const ThresholdEntry& e : entries) {
      if (e.num_qubits == num_qubits && e.kind == kind) return e.alpha;
    }
    return std::nullopt;
  }
};

// Computed once and shared between criteria 4 and 5.
const ThresholdTable& computed_thresholds() {
  static const ThresholdTable table = [] {
    ThresholdTable t;
    const auto start = std::chrono::steady_clock::now();
    for (int n = 4; n <= 8; ++n) {
      for (NoiseKind kind : qsim::kAllNoiseKinds) {
        const qsim::ThresholdResult result =
            qsim::alpha_threshold(n, kind, 0.95, 1e-4);
        t.entries.push_back({n, kind, result.alpha});
      }
    }
    t.wall_seconds = seconds_since(start);
    return t;
  }();
  return table;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("criterion 1: rerun budget table at C=0.95") {
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();

  qsim::ExperimentConfig config;
  config.min_qubits = 3;
  config.max_qubits = 8;
  std::ostringstream out;
  qsim::run_pmin(config, out);

  constexpr int expected_k[] = {1, 2, 3, 5, 7, 10};
  constexpr double expected_p_min[] = {0.95000, 0.77639, 0.63160,
                                       0.45072, 0.34816, 0.25887};
  const auto lines = lines_of(out.str());
  ACCEPT(ok, lines.size() == 7);
  for (std::size_t i = 1; i < lines.size() && ok; ++i) {
    const auto fields = fields_of(lines[i]);
    ACCEPT(ok, std::stoi(fields[6]) == expected_k[i - 1]);
    ACCEPT(ok, std::abs(std::stod(fields[5]) - expected_p_min[i - 1]) < 5e-6);
  }
  const double elapsed = seconds_since(start);
  ACCEPT(ok, elapsed < 1.0);
  report(1, "pmin reproduces the k and p_min table to 5 decimals in < 1 s",
         ok);
}

TEST_CASE("criterion 2: noiseless runs equal the closed form") {
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 8; ++n) {
    const GroverInstance inst(n, GroverInstance::default_marked(n));
    const double expected = qsim::closed_form_success(inst, inst.iterations);
    for (NoiseKind kind : qsim::kAllNoiseKinds) {
      const double simulated = qsim::run_noisy(inst, NoiseFamily(kind, 0.0));
      ACCEPT(ok, std::abs(simulated - expected) <= 1e-10);
    }
  }
  const double elapsed = seconds_since(start);
  ACCEPT(ok, elapsed < 10.0);
  std::printf("  (noiseless sweep over n=2..8, six families: %.1f s)\n",
              elapsed);
  report(2, "noiseless simulator matches sin^2((2k+1)theta) within 1e-10",
         ok);
}

TEST_CASE("criterion 3: three qubits are never competitive") {
  bool ok = true;
  const double noiseless =
      qsim::closed_form_success(GroverInstance(3, 4), 2);
  ACCEPT(ok, std::abs(noiseless - 0.94531) <= 1e-4);
  ACCEPT(ok, noiseless < 0.95);

  qsim::ExperimentConfig config;
  config.min_qubits = 3;
  config.max_qubits = 3;
  std::ostringstream out;
  qsim::run_threshold(config, out);
  const auto lines = lines_of(out.str());
  ACCEPT(ok, lines.size() == 7);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    ACCEPT(ok, fields_of(lines[i])[8] == "never-competitive");
  }
  report(3, "noiseless three-qubit success 0.94531 < p_min and threshold "
            "reports never-competitive for all families",
         ok);
}

TEST_CASE("criterion 4: maximal tolerable noise reproduces Table II") {
  bool ok = true;
  const ThresholdTable& table = computed_thresholds();

  int matches = 0;
  int comparable = 0;
  for (int n = 4; n <= 8; ++n) {
    for (NoiseKind kind : qsim::kAllNoiseKinds) {
      const std::optional<double> alpha = table.at(n, kind);
      ACCEPT(ok, alpha.has_value());
      if (!alpha) continue;
      const double reference = paper_threshold(kind, n);
      const bool exempt = n == 5 && kind == NoiseKind::kAmplitudeDamping;
      const bool within = std::abs(*alpha - reference) <= 0.005;
      if (exempt) {
        std::printf(
            "  N=2^%d %-18s computed %.4f (paper prints %.3f; suspected "
            "misprint, exempt)\n",
            n, std::string(qsim::to_string(kind)).c_str(), *alpha, reference);
        continue;
      }
      ++comparable;
      if (within) ++matches;
      std::printf("  N=2^%d %-18s computed %.4f paper %.3f %s\n", n,
                  std::string(qsim::to_string(kind)).c_str(), *alpha,
                  reference, within ? "ok" : "MISMATCH");
    }
  }
  std::printf("  (%d of %d comparable entries within +-0.005; %.0f s)\n",
              matches, comparable, table.wall_seconds);
  ACCEPT(ok, matches >= 27);
  ACCEPT(ok, table.wall_seconds < 1800.0);
  report(4, "threshold table matches >= 27 of 30 entries within +-0.005 "
            "inside the 30 min budget",
         ok);
}

TEST_CASE("criterion 5: destructiveness ordering of the damping channels") {
  bool ok = true;
  const ThresholdTable& table = computed_thresholds();
  for (int n = 4; n <= 8; ++n) {
    const auto phase = table.at(n, NoiseKind::kPhaseDamping);
    const auto amplitude = table.at(n, NoiseKind::kAmplitudeDamping);
    const auto depolarizing = table.at(n, NoiseKind::kDepolarizing);
    ACCEPT(ok, phase && amplitude && depolarizing);
    if (!(phase && amplitude && depolarizing)) continue;
    ACCEPT(ok, *phase > *amplitude);
    ACCEPT(ok, *amplitude > *depolarizing);
  }
  report(5, "alpha*(phase damping) > alpha*(amplitude damping) > "
            "alpha*(depolarizing) at every size",
         ok);
}

TEST_CASE("criterion 6: CPTP properties on random channel draws") {
  bool ok = true;
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> alpha_dist(0.0, 1.0);
  std::uniform_int_distribution<int> kind_dist(0, 5);
  std::uniform_int_distribution<int> qubit_dist(1, 3);

  for (int draw = 0; draw < 100; ++draw) {
    const int n = qubit_dist(rng);
    const NoiseFamily family(qsim::kAllNoiseKinds[kind_dist(rng)],
                             alpha_dist(rng));

    const qsim::KrausChannel one_qubit = qsim::make_family(family);
    ACCEPT(ok, one_qubit.completeness_defect() <= 1e-10);

    // Random density matrix from a normalized Wishart draw.
    const std::size_t dim = std::size_t{1} << n;
    qsim::ComplexMatrix g(dim, dim);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        g(i, j) = qsim::complex_t{gauss(rng), gauss(rng)};
      }
    }
    qsim::ComplexMatrix wishart = g * qsim::dagger(g);
    wishart *= qsim::complex_t{1.0 / qsim::trace(wishart).real()};
    const qsim::DensityMatrix rho(n, wishart);

    const qsim::DensityMatrix mapped = qsim::apply_local_noise(rho, family);
    ACCEPT(ok, std::abs(qsim::trace(mapped.matrix()) -
                        qsim::complex_t{1.0}) <= 1e-10);
    ACCEPT(ok,
           qsim::hermitian_min_eigenvalue(mapped.matrix()) >= -1e-9);

    if (n >= 2) {
      const qsim::KrausChannel expanded =
          qsim::expand_local_kraus(family, n);
      ACCEPT(ok, expanded.completeness_defect() <= 1e-10);
      const qsim::DensityMatrix reference = qsim::apply_kraus(rho, expanded);
      ACCEPT(ok, qsim::max_abs_diff(mapped.matrix(), reference.matrix()) <=
                     1e-10);
    }
  }
  report(6, "completeness, trace preservation, positivity, and per-qubit vs "
            "expanded-Kraus equality on 100 random draws",
         ok);
}

TEST_CASE("criterion 7: full depolarization fixed point") {
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    const GroverInstance inst(n, GroverInstance::default_marked(n));
    const double p =
        qsim::run_noisy(inst, NoiseFamily(NoiseKind::kDepolarizing, 0.75));
    ACCEPT(ok,
           std::abs(p - 1.0 / static_cast<double>(inst.space_size)) <= 1e-10);
  }
  report(7, "depolarizing at alpha=3/4 drives every run to exactly 1/N", ok);
}

TEST_CASE("criterion 8: sweep output is byte-identical across invocations") {
  bool ok = true;
  const std::string tool = GROVER_NOISE_TOOL_PATH;
  const std::string args =
      " sweep --qubits 4 --family depolarizing --alpha-grid 0:0.02:0.005"
      " --confidence 0.95 --output ";
  const std::string first = "acceptance_sweep_first.csv";
  const std::string second = "acceptance_sweep_second.csv";

  ACCEPT(ok, std::system((tool + args + first).c_str()) == 0);
  ACCEPT(ok, std::system((tool + args + second).c_str()) == 0);

  const std::string first_bytes = read_file(first);
  const std::string second_bytes = read_file(second);
  ACCEPT(ok, !first_bytes.empty());
  ACCEPT(ok, first_bytes == second_bytes);
  std::remove(first.c_str());
  std::remove(second.c_str());
  report(8, "two identical sweep invocations produce byte-identical files",
         ok);
}

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

#include "qsim/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsim/state.hpp"

namespace qsim {

namespace {

constexpr double kStepTolerance = 1e-9;

void validate_or_throw(const ComplexMatrix& rho, const char* stage, int step) {
  const ValidationReport report = validate_density(rho, kStepTolerance);
  if (report.ok()) return;
  throw ValidationError(std::string("density invariant breach after ") +
                        stage + " at iteration " + std::to_string(step) +
                        ": hermiticity " +
                        std::to_string(report.hermiticity_deviation) +
                        ", trace " + std::to_string(report.trace_deviation) +
                        ", min eigenvalue " +
                        std::to_string(report.min_eigenvalue));
}

}  // namespace

GroverInstance::GroverInstance(int num_qubits, std::size_t marked)
    : num_qubits(num_qubits),
      space_size(0),
      marked(marked),
      iterations(0) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("GroverInstance: qubit count out of range");
  }
  space_size = std::size_t{1} << num_qubits;
  if (marked >= space_size) {
    throw std::out_of_range("GroverInstance: marked index out of range");
  }
  const double n = static_cast<double>(space_size);
  iterations = static_cast<int>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(n)));
}

ComplexMatrix oracle_matrix(const GroverInstance& inst) {
  ComplexMatrix o = ComplexMatrix::identity(inst.space_size);
  o(inst.marked, inst.marked) = -1.0;
  return o;
}

ComplexMatrix diffusion_matrix(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("diffusion_matrix: qubit count must be >= 1");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double off = 2.0 / static_cast<double>(dim);
  ComplexMatrix d(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      d(i, j) = (i == j) ? off - 1.0 : off;
    }
  }
  return d;
}

ComplexMatrix grover_step(const GroverInstance& inst) {
  return diffusion_matrix(inst.num_qubits) * oracle_matrix(inst);
}

ComplexMatrix hadamard_transform(int num_qubits) {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix h1 = ComplexMatrix::from_rows({{s, s}, {s, -s}});
  ComplexMatrix h = h1;
  for (int q = 1; q < num_qubits; ++q) h = kron(h, h1);
  return h;
}

double closed_form_success(const GroverInstance& inst, int k) {
  if (k < 0) {
    throw std::invalid_argument("closed_form_success: negative iteration");
  }
  const double theta =
      std::asin(1.0 / std::sqrt(static_cast<double>(inst.space_size)));
  const double beta = std::sin((2.0 * k + 1.0) * theta);
  return beta * beta;
}

DensityMatrix run_noisy_state(const GroverInstance& inst,
                              const NoiseFamily& family) {
  const ComplexMatrix hadamard = hadamard_transform(inst.num_qubits);
  const ComplexMatrix step = grover_step(inst);
  const ComplexMatrix step_adj = dagger(step);

  ComplexMatrix rho =
      density_from_pure(basis_state(inst.num_qubits, 0)).matrix();
  // H is real symmetric, so H^dagger = H.
  rho = hadamard * rho * hadamard;
  validate_or_throw(rho, "initialisation", 0);

  for (int it = 1; it <= inst.iterations; ++it) {
    rho = step * rho * step_adj;
    validate_or_throw(rho, "Grover iteration", it);
    rho = apply_local_noise(DensityMatrix(inst.num_qubits, std::move(rho)),
                            family)
              .matrix();
    validate_or_throw(rho, "noise channel", it);
  }
  return DensityMatrix(inst.num_qubits, std::move(rho));
}

double run_noisy(const GroverInstance& inst, const NoiseFamily& family) {
  return success_probability(run_noisy_state(inst, family), inst.marked);
}

}  // namespace qsim

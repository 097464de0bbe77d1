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

#include "qsim/state.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qsim {

namespace {

constexpr double kNormTolerance = 1e-10;

std::size_t checked_dimension(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("qubit count must be in [1, 30]");
  }
  return std::size_t{1} << num_qubits;
}

}  // namespace

PureState::PureState(int num_qubits, std::vector<complex_t> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dimension(num_qubits)) {
    throw std::invalid_argument("PureState: amplitude count must be 2^n");
  }
  double norm2 = 0.0;
  for (const complex_t& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureState: amplitudes not normalized");
  }
}

DensityMatrix::DensityMatrix(int num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
  if (!matrix_.is_square() ||
      matrix_.rows() != checked_dimension(num_qubits)) {
    throw std::invalid_argument("DensityMatrix: matrix side must be 2^n");
  }
}

PureState basis_state(int num_qubits, std::size_t index) {
  const std::size_t dim = checked_dimension(num_qubits);
  if (index >= dim) {
    throw std::out_of_range("basis_state: index out of range");
  }
  std::vector<complex_t> amps(dim, complex_t{});
  amps[index] = 1.0;
  return PureState(num_qubits, std::move(amps));
}

PureState uniform_superposition(int num_qubits) {
  const std::size_t dim = checked_dimension(num_qubits);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return PureState(num_qubits, std::vector<complex_t>(dim, complex_t{amp}));
}

DensityMatrix density_from_pure(const PureState& psi) {
  const std::size_t dim = psi.dimension();
  ComplexMatrix rho(dim, dim);
  const auto& amps = psi.amplitudes();
  for (std::size_t i = 0; i < dim; ++i) {
    if (amps[i] == complex_t{}) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      rho(i, j) = amps[i] * std::conj(amps[j]);
    }
  }
  return DensityMatrix(psi.num_qubits(), std::move(rho));
}

double success_probability(const DensityMatrix& rho, std::size_t marked) {
  if (marked >= rho.dimension()) {
    throw std::out_of_range("success_probability: marked index out of range");
  }
  return rho.matrix()(marked, marked).real();
}

ValidationReport validate_density(const ComplexMatrix& rho, double tol,
                                  double eigenvalue_floor) {
  if (!rho.is_square()) {
    throw std::invalid_argument("validate_density: matrix must be square");
  }
  ValidationReport report;
  report.finite = all_finite(rho);
  if (!report.finite) {
    report.hermiticity_deviation = std::numeric_limits<double>::quiet_NaN();
    report.trace_deviation = std::numeric_limits<double>::quiet_NaN();
    report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  report.hermiticity_deviation = hermiticity_deviation(rho);
  report.hermitian_pass = report.hermiticity_deviation <= tol;
  report.trace_deviation = std::abs(trace(rho) - complex_t{1.0});
  report.trace_pass = report.trace_deviation <= tol;

  ComplexMatrix hermitian_part = rho;
  const ComplexMatrix adj = dagger(rho);
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    for (std::size_t j = 0; j < rho.cols(); ++j) {
      hermitian_part(i, j) = 0.5 * (rho(i, j) + adj(i, j));
    }
  }
  report.min_eigenvalue = hermitian_min_eigenvalue(hermitian_part);
  report.psd_pass = report.min_eigenvalue >= eigenvalue_floor;
  return report;
}

}  // namespace qsim

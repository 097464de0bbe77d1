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

#ifndef QSIM_STATE_HPP_
#define QSIM_STATE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsim/linalg.hpp"

namespace qsim {

/// Signals that a density matrix broke a physical invariant at runtime
/// (Hermiticity, unit trace, or positivity). The CLI maps this to exit
/// code 3.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Normalized state vector over n qubits: 2^n complex amplitudes whose
/// squared norms sum to 1 within 1e-10.
class PureState {
 public:
  PureState(int num_qubits, std::vector<complex_t> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<complex_t>& amplitudes() const { return amplitudes_; }
  complex_t amplitude(std::size_t i) const { return amplitudes_.at(i); }

 private:
  int num_qubits_;
  std::vector<complex_t> amplitudes_;
};

/// Quantum state of n qubits as a 2^n x 2^n density matrix.
///
/// Construction checks only structure (square, side 2^n, finite entries).
/// The physical invariants -- Hermitian within 1e-10, trace one within
/// 1e-10, min eigenvalue >= -1e-9 -- are asserted by validate_density,
/// which the simulation pipeline calls after every evolution step.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, ComplexMatrix matrix);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  int num_qubits_;
  ComplexMatrix matrix_;
};

/// Computational basis state |index> of an n-qubit register. Basis vectors
/// are labelled in binary with qubit 0 as the most significant bit, so
/// basis_state(3, 4) is |100>.
PureState basis_state(int num_qubits, std::size_t index);

/// Flat superposition H^{(x)n}|0...0>: every amplitude 1/sqrt(2^n).
PureState uniform_superposition(int num_qubits);

/// Rank-one projector |psi><psi|.
DensityMatrix density_from_pure(const PureState& psi);

/// Probability of measuring basis outcome `marked`: p = <marked|rho|marked>.
/// Reads the diagonal entry; the imaginary part (below 1e-12 for any valid
/// state) is discarded. Throws std::out_of_range for a bad index.
double success_probability(const DensityMatrix& rho, std::size_t marked);

/// Per-invariant outcome of a density-matrix check. Failures are data, not
/// errors; callers decide whether to throw.
struct ValidationReport {
  double hermiticity_deviation = 0.0;  // max-norm of rho - rho^dagger
  double trace_deviation = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;         // of the Hermitian part
  bool finite = false;
  bool hermitian_pass = false;
  bool trace_pass = false;
  bool psd_pass = false;

  bool ok() const {
    return finite && hermitian_pass && trace_pass && psd_pass;
  }
};

/// Checks the three density-matrix invariants on a square matrix.
/// `tol` bounds the Hermiticity and trace deviations; the eigenvalue floor
/// stays at -1e-9 independently, matching the accuracy contract of the
/// eigensolver. The minimum eigenvalue is computed on the Hermitian part
/// (rho + rho^dagger)/2 so the report is well-defined even when the
/// Hermiticity check fails.
ValidationReport validate_density(const ComplexMatrix& rho, double tol = 1e-10,
                                  double eigenvalue_floor = -1e-9);

}  // namespace qsim

#endif  // QSIM_STATE_HPP_

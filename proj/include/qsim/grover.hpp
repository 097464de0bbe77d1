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

#ifndef QSIM_GROVER_HPP_
#define QSIM_GROVER_HPP_

#include <cstddef>

#include "qsim/channel.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

/// One search problem: n qubits, search space N = 2^n, marked element xi,
/// and the iteration count floor(pi/4 * sqrt(N)).
struct GroverInstance {
  int num_qubits;
  std::size_t space_size;
  std::size_t marked;
  int iterations;

  GroverInstance(int num_qubits, std::size_t marked);

  /// The marked element used throughout the experiments: the "middle" of
  /// the element space, xi = 2^(n-1).
  static std::size_t default_marked(int num_qubits) {
    return std::size_t{1} << (num_qubits - 1);
  }
};

/// Phase oracle O = I - 2|xi><xi|: diagonal with -1 at (xi, xi) and +1
/// elsewhere. Marks the sought element by negating its amplitude.
ComplexMatrix oracle_matrix(const GroverInstance& inst);

/// Diffusion operator D = 2|psi><psi| - I for the flat state |psi|:
/// diagonal entries 2/N - 1, off-diagonal entries 2/N. Inverts amplitudes
/// about their mean.
ComplexMatrix diffusion_matrix(int num_qubits);

/// Grover iteration gate G = D * O.
ComplexMatrix grover_step(const GroverInstance& inst);

/// H^{(x)n}, the n-fold Kronecker power of the Hadamard gate.
ComplexMatrix hadamard_transform(int num_qubits);

/// Success probability of the noiseless algorithm after k iterations:
/// sin^2((2k+1) * theta) with sin(theta) = 1/sqrt(N).
double closed_form_success(const GroverInstance& inst, int k);

/// Runs the noisy search and returns the final register state:
///   rho := |0...0><0...0|
///   rho := H^{(x)n} rho H^{(x)n}
///   repeat `iterations` times: rho := G rho G^dagger; rho := Phi(rho)
/// Noise is applied after each Grover iteration only -- not after the
/// initial Hadamard and not before measurement. Every intermediate state
/// is validated at tolerance 1e-9; a breach throws ValidationError.
DensityMatrix run_noisy_state(const GroverInstance& inst,
                              const NoiseFamily& family);

/// run_noisy_state followed by measurement: <xi|rho|xi>.
double run_noisy(const GroverInstance& inst, const NoiseFamily& family);

}  // namespace qsim

#endif  // QSIM_GROVER_HPP_

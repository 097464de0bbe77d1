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

#ifndef QSIM_CHANNEL_HPP_
#define QSIM_CHANNEL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qsim/linalg.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// The six one-parameter families of one-qubit noise channels.
enum class NoiseKind {
  kDepolarizing,
  kAmplitudeDamping,
  kPhaseDamping,
  kBitFlip,
  kPhaseFlip,
  kBitPhaseFlip,
};

inline constexpr std::array<NoiseKind, 6> kAllNoiseKinds = {
    NoiseKind::kDepolarizing, NoiseKind::kAmplitudeDamping,
    NoiseKind::kPhaseDamping, NoiseKind::kBitFlip,
    NoiseKind::kPhaseFlip,    NoiseKind::kBitPhaseFlip,
};

/// Serialized channel names used by the CLI and output files.
std::string_view to_string(NoiseKind kind);
std::optional<NoiseKind> noise_kind_from_string(std::string_view name);

/// A noise family selection: which channel and how much of it.
/// alpha is the amount of noise, a dimensionless real in [0, 1].
struct NoiseFamily {
  NoiseKind kind;
  double alpha;

  NoiseFamily(NoiseKind kind, double alpha);
};

/// A finite set of Kraus operators {E_k}, all d x d, satisfying the
/// completeness relation sum_k E_k^dagger E_k = I within 1e-10 max-norm.
/// The represented channel acts as Phi(rho) = sum_k E_k rho E_k^dagger.
class KrausChannel {
 public:
  /// Throws std::invalid_argument on mixed dimensions or a completeness
  /// defect above 1e-10.
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> operators);

  std::size_t dimension() const { return dim_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

  /// Max-norm of sum_k E_k^dagger E_k - I.
  double completeness_defect() const;

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> operators_;
};

/// The one-qubit (d=2) Kraus set of a noise family:
///   depolarizing      {sqrt(1-a) I, sqrt(a/3) X, sqrt(a/3) Y, sqrt(a/3) Z}
///   amplitude damping {diag(1, sqrt(1-a)), [[0, sqrt(a)], [0, 0]]}
///   phase damping     {diag(1, sqrt(1-a)), diag(0, sqrt(a))}
///   bit flip          {sqrt(1-a) I, sqrt(a) X}
///   phase flip        {sqrt(1-a) I, sqrt(a) Z}
///   bit-phase flip    {sqrt(1-a) I, sqrt(a) Y}
/// Zero operators (e.g. the sqrt(a) term at a=0) are kept in the set.
KrausChannel make_family(const NoiseFamily& family);

/// Phi(rho) = sum_k E_k rho E_k^dagger via dense products. Throws
/// std::invalid_argument when dimensions disagree.
DensityMatrix apply_kraus(const DensityMatrix& rho,
                          const KrausChannel& channel);

/// The full n-qubit Kraus set of the local channel: all Cartesian-product
/// tensor operators e_{i_1} (x) ... (x) e_{i_n} over the one-qubit set.
/// Operator counts grow as (set size)^n, so expansion is capped at n <= 4;
/// it exists as an exact cross-check for apply_local_noise.
KrausChannel expand_local_kraus(const NoiseFamily& family, int num_qubits);

/// Applies a one-qubit channel to qubit `qubit` of an n-qubit register
/// (qubit 0 = most significant bit), contracting the 2x2 Kraus operators
/// against the target-qubit index pair directly instead of lifting them to
/// 2^n x 2^n matrices.
ComplexMatrix apply_single_qubit_kraus(const ComplexMatrix& rho,
                                       const KrausChannel& one_qubit,
                                       int qubit, int num_qubits);

/// Applies the family's one-qubit channel to every qubit in turn (qubit 0
/// through n-1). Per-qubit errors are independent, so this composition
/// equals the expanded product-set channel; channels on distinct qubits
/// commute, so the order is immaterial.
DensityMatrix apply_local_noise(const DensityMatrix& rho,
                                const NoiseFamily& family);

}  // namespace qsim

#endif  // QSIM_CHANNEL_HPP_

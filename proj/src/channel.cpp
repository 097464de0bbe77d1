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

#include "qsim/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsim {

namespace {

constexpr double kCompletenessTolerance = 1e-10;

// Expansion is a test oracle only: depolarizing at n=5 would already need
// 1024 operators of size 32x32.
constexpr int kMaxExpansionQubits = 4;

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows(
      {{0.0, complex_t{0.0, -1.0}}, {complex_t{0.0, 1.0}, 0.0}});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

}  // namespace

std::string_view to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kDepolarizing:
      return "depolarizing";
    case NoiseKind::kAmplitudeDamping:
      return "amplitude-damping";
    case NoiseKind::kPhaseDamping:
      return "phase-damping";
    case NoiseKind::kBitFlip:
      return "bit-flip";
    case NoiseKind::kPhaseFlip:
      return "phase-flip";
    case NoiseKind::kBitPhaseFlip:
      return "bit-phase-flip";
  }
  throw std::invalid_argument("unknown NoiseKind");
}

std::optional<NoiseKind> noise_kind_from_string(std::string_view name) {
  for (NoiseKind kind : kAllNoiseKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

NoiseFamily::NoiseFamily(NoiseKind kind, double alpha)
    : kind(kind), alpha(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("NoiseFamily: alpha must lie in [0, 1]");
  }
}

KrausChannel::KrausChannel(std::size_t dim,
                           std::vector<ComplexMatrix> operators)
    : dim_(dim), operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw std::invalid_argument("KrausChannel: empty operator set");
  }
  for (const ComplexMatrix& op : operators_) {
    if (op.rows() != dim_ || op.cols() != dim_) {
      throw std::invalid_argument("KrausChannel: operator dimension mismatch");
    }
  }
  const double defect = completeness_defect();
  if (!(defect <= kCompletenessTolerance)) {
    throw std::invalid_argument(
        "KrausChannel: completeness relation violated (defect " +
        std::to_string(defect) + ")");
  }
}

double KrausChannel::completeness_defect() const {
  ComplexMatrix sum(dim_, dim_);
  for (const ComplexMatrix& op : operators_) {
    sum += dagger(op) * op;
  }
  return max_abs_diff(sum, ComplexMatrix::identity(dim_));
}

KrausChannel make_family(const NoiseFamily& family) {
  const double a = family.alpha;
  const double keep = std::sqrt(1.0 - a);
  std::vector<ComplexMatrix> ops;
  switch (family.kind) {
    case NoiseKind::kDepolarizing: {
      const double flip = std::sqrt(a / 3.0);
      ops.push_back(keep * ComplexMatrix::identity(2));
      ops.push_back(flip * pauli_x());
      ops.push_back(flip * pauli_y());
      ops.push_back(flip * pauli_z());
      break;
    }
    case NoiseKind::kAmplitudeDamping:
      ops.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, keep}}));
      ops.push_back(
          ComplexMatrix::from_rows({{0.0, std::sqrt(a)}, {0.0, 0.0}}));
      break;
    case NoiseKind::kPhaseDamping:
      ops.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, keep}}));
      ops.push_back(
          ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, std::sqrt(a)}}));
      break;
    case NoiseKind::kBitFlip:
      ops.push_back(keep * ComplexMatrix::identity(2));
      ops.push_back(std::sqrt(a) * pauli_x());
      break;
    case NoiseKind::kPhaseFlip:
      ops.push_back(keep * ComplexMatrix::identity(2));
      ops.push_back(std::sqrt(a) * pauli_z());
      break;
    case NoiseKind::kBitPhaseFlip:
      ops.push_back(keep * ComplexMatrix::identity(2));
      ops.push_back(std::sqrt(a) * pauli_y());
      break;
  }
  return KrausChannel(2, std::move(ops));
}

DensityMatrix apply_kraus(const DensityMatrix& rho,
                          const KrausChannel& channel) {
  if (channel.dimension() != rho.dimension()) {
    throw std::invalid_argument("apply_kraus: dimension mismatch");
  }
  ComplexMatrix out(rho.dimension(), rho.dimension());
  for (const ComplexMatrix& op : channel.operators()) {
    out += op * rho.matrix() * dagger(op);
  }
  return DensityMatrix(rho.num_qubits(), std::move(out));
}

KrausChannel expand_local_kraus(const NoiseFamily& family, int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxExpansionQubits) {
    throw std::invalid_argument(
        "expand_local_kraus: qubit count exceeds expansion limit");
  }
  const KrausChannel one_qubit = make_family(family);
  const auto& base = one_qubit.operators();
  const std::size_t dim = std::size_t{1} << num_qubits;

  // Odometer over the per-qubit operator indices (i_1, ..., i_n); the last
  // index runs fastest.
  std::vector<std::size_t> digits(static_cast<std::size_t>(num_qubits), 0);
  std::vector<ComplexMatrix> expanded;
  for (;;) {
    ComplexMatrix op = base[digits[0]];
    for (int q = 1; q < num_qubits; ++q) {
      op = kron(op, base[digits[static_cast<std::size_t>(q)]]);
    }
    expanded.push_back(std::move(op));
    int pos = num_qubits - 1;
    while (pos >= 0) {
      auto& d = digits[static_cast<std::size_t>(pos)];
      if (++d < base.size()) break;
      d = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return KrausChannel(dim, std::move(expanded));
}

ComplexMatrix apply_single_qubit_kraus(const ComplexMatrix& rho,
                                       const KrausChannel& one_qubit,
                                       int qubit, int num_qubits) {
  if (one_qubit.dimension() != 2) {
    throw std::invalid_argument(
        "apply_single_qubit_kraus: channel must be one-qubit");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (!rho.is_square() || rho.rows() != dim) {
    throw std::invalid_argument("apply_single_qubit_kraus: size mismatch");
  }
  if (qubit < 0 || qubit >= num_qubits) {
    throw std::invalid_argument("apply_single_qubit_kraus: bad qubit index");
  }

  // Bit weight of the target qubit; qubit 0 is the most significant bit.
  const std::size_t stride = dim >> (qubit + 1);
  ComplexMatrix out(dim, dim);

  for (const ComplexMatrix& e : one_qubit.operators()) {
    const complex_t e00 = e(0, 0), e01 = e(0, 1);
    const complex_t e10 = e(1, 0), e11 = e(1, 1);
    const complex_t f00 = std::conj(e00), f01 = std::conj(e01);
    const complex_t f10 = std::conj(e10), f11 = std::conj(e11);
    for (std::size_t rb = 0; rb < dim; rb += 2 * stride) {
      for (std::size_t ro = 0; ro < stride; ++ro) {
        const std::size_t i0 = rb + ro;
        const std::size_t i1 = i0 + stride;
        for (std::size_t cb = 0; cb < dim; cb += 2 * stride) {
          for (std::size_t co = 0; co < stride; ++co) {
            const std::size_t j0 = cb + co;
            const std::size_t j1 = j0 + stride;
            const complex_t b00 = rho(i0, j0), b01 = rho(i0, j1);
            const complex_t b10 = rho(i1, j0), b11 = rho(i1, j1);
            // c = e * B, then out-block += c * e^dagger.
            const complex_t c00 = e00 * b00 + e01 * b10;
            const complex_t c01 = e00 * b01 + e01 * b11;
            const complex_t c10 = e10 * b00 + e11 * b10;
            const complex_t c11 = e10 * b01 + e11 * b11;
            out(i0, j0) += c00 * f00 + c01 * f01;
            out(i0, j1) += c00 * f10 + c01 * f11;
            out(i1, j0) += c10 * f00 + c11 * f01;
            out(i1, j1) += c10 * f10 + c11 * f11;
          }
        }
      }
    }
  }
  return out;
}

DensityMatrix apply_local_noise(const DensityMatrix& rho,
                                const NoiseFamily& family) {
  const KrausChannel one_qubit = make_family(family);
  ComplexMatrix current = rho.matrix();
  for (int q = 0; q < rho.num_qubits(); ++q) {
    current =
        apply_single_qubit_kraus(current, one_qubit, q, rho.num_qubits());
  }
  return DensityMatrix(rho.num_qubits(), std::move(current));
}

}  // namespace qsim

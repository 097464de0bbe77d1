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

#ifndef QSIM_LINALG_HPP_
#define QSIM_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qsim {

using complex_t = std::complex<double>;

/// Dense complex matrix with row-major storage. Register sizes in this
/// project peak at 256x256, where dense storage beats anything sparse.
///
/// Values are immutable once built by the algebra below; all operations
/// return fresh matrices and are safe to call concurrently.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero-filled rows x cols matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t dim);

  /// Builds from nested row lists: {{a,b},{c,d}}. Rows must be equal length.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<complex_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  complex_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const complex_t& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  complex_t* data() { return data_.data(); }
  const complex_t* data() const { return data_.data(); }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(complex_t scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex_t> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(complex_t scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, complex_t scale);

/// Matrix product. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Kronecker product: block (i,j) of the result equals a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Sum of diagonal entries. Throws std::invalid_argument if not square.
complex_t trace(const ComplexMatrix& a);

/// Which subsystem survives a partial trace.
enum class Keep { A, B };

/// Partial trace of a (dim_a*dim_b) x (dim_a*dim_b) matrix over one
/// subsystem.
///
/// Composite indices follow the double-index convention k = (m-1)*dimB + mu
/// with 1-based Latin (m, subsystem A) and Greek (mu, subsystem B) indices;
/// in 0-based storage k = m*dim_b + mu. Hence:
///   keep == Keep::A:  out(m,n)   = sum_mu  rho(m*dim_b + mu, n*dim_b + mu)
///   keep == Keep::B:  out(mu,nu) = sum_m   rho(m*dim_b + mu, m*dim_b + nu)
/// The Bell-state test locks this mapping.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a,
                            std::size_t dim_b, Keep keep);

/// Smallest eigenvalue of a Hermitian matrix, accurate to 1e-9.
/// Throws std::invalid_argument if the input deviates from Hermitian by
/// more than 1e-10 in max-norm.
double hermitian_min_eigenvalue(const ComplexMatrix& a);

// Max-norm helpers used throughout validation and tests.
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-norm of a - a^dagger. Zero for exactly Hermitian input.
double hermiticity_deviation(const ComplexMatrix& a);

/// True when no entry is NaN or infinite.
bool all_finite(const ComplexMatrix& a);

}  // namespace qsim

#endif  // QSIM_LINALG_HPP_

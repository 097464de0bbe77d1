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

#include "qsim/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace qsim {

namespace {

using EigenRowMajor =
    Eigen::Matrix<complex_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const EigenRowMajor>;
using MutableMap = Eigen::Map<EigenRowMajor>;

ConstMap map_of(const ComplexMatrix& m) {
  return ConstMap(m.data(), static_cast<Eigen::Index>(m.rows()),
                  static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix dimensions must be positive");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<complex_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw std::invalid_argument("from_rows: ragged row lengths");
    }
    std::size_t j = 0;
    for (const complex_t& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix addition: dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix subtraction: dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex_t scale) {
  for (complex_t& v : data_) v *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(complex_t scale, ComplexMatrix m) {
  m *= scale;
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, complex_t scale) {
  m *= scale;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("matrix product: dimension mismatch");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  MutableMap(out.data(), static_cast<Eigen::Index>(out.rows()),
             static_cast<Eigen::Index>(out.cols()))
      .noalias() = map_of(lhs) * map_of(rhs);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const complex_t aij = a(i, j);
      if (aij == complex_t{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

complex_t trace(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("trace: matrix must be square");
  }
  complex_t sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a,
                            std::size_t dim_b, Keep keep) {
  if (!rho.is_square() || rho.rows() != dim_a * dim_b) {
    throw std::invalid_argument(
        "partial_trace: matrix side must equal dim_a * dim_b");
  }
  if (keep == Keep::A) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t m = 0; m < dim_a; ++m) {
      for (std::size_t n = 0; n < dim_a; ++n) {
        complex_t sum = 0.0;
        for (std::size_t mu = 0; mu < dim_b; ++mu) {
          sum += rho(m * dim_b + mu, n * dim_b + mu);
        }
        out(m, n) = sum;
      }
    }
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t mu = 0; mu < dim_b; ++mu) {
    for (std::size_t nu = 0; nu < dim_b; ++nu) {
      complex_t sum = 0.0;
      for (std::size_t m = 0; m < dim_a; ++m) {
        sum += rho(m * dim_b + mu, m * dim_b + nu);
      }
      out(mu, nu) = sum;
    }
  }
  return out;
}

double hermitian_min_eigenvalue(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("hermitian_min_eigenvalue: matrix not square");
  }
  if (hermiticity_deviation(a) > 1e-10) {
    throw std::invalid_argument(
        "hermitian_min_eigenvalue: matrix not Hermitian within 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(
      map_of(a), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_min_eigenvalue: eigensolver failed");
  }
  return solver.eigenvalues().minCoeff();
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  const complex_t* p = a.data();
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(p[i]));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
    }
  }
  return m;
}

double hermiticity_deviation(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("hermiticity_deviation: matrix not square");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

bool all_finite(const ComplexMatrix& a) {
  const complex_t* p = a.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(p[i].real()) || !std::isfinite(p[i].imag())) {
      return false;
    }
  }
  return true;
}

}  // namespace qsim

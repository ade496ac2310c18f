// Copyright 2026 The qotkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qot {

using cxd = std::complex<double>;

// Dense complex matrix, row-major. Value semantics throughout; all entries
// are expected to stay finite (checked where inputs enter the toolkit).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cxd{0.0, 0.0}) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool same_shape(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cxd>& data() const { return data_; }
  std::vector<cxd>& data() { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cxd s);

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conjugate() const;

  cxd trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  // max_ij |(A - A^†)_ij|; 0 for non-square by convention is not provided,
  // caller must pass a square matrix.
  double hermiticity_defect() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cxd> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cxd s, Matrix a);
Matrix operator*(double s, Matrix a);

// Kronecker product with row-major convention: (A ⊗ B)[(i,k),(j,l)] = A_ij B_kl,
// composite index (i,k) = i * B.rows() + k.
Matrix kron(const Matrix& a, const Matrix& b);

// Hilbert-Schmidt pairing tr(a^† b).
cxd hs_inner(const Matrix& a, const Matrix& b);

// (m + m^†)/2 for square m.
Matrix hermitian_part(const Matrix& m);

}  // namespace qot

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

#include "qot/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qot/errors.hpp"

namespace qot {

Matrix& Matrix::operator+=(const Matrix& o) {
  if (!same_shape(o)) throw DimensionMismatch("matrix add: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (!same_shape(o)) throw DimensionMismatch("matrix sub: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cxd s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conjugate() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = std::conj(data_[i]);
  return r;
}

cxd Matrix::trace() const {
  if (!square()) throw DimensionMismatch("trace: matrix not square");
  cxd t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double Matrix::hermiticity_defect() const {
  if (!square()) throw DimensionMismatch("hermiticity_defect: not square");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

Matrix operator+(Matrix a, const Matrix& b) {
  a += b;
  return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
  a -= b;
  return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dim mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cxd aik = a(i, k);
      if (aik == cxd{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Matrix operator*(cxd s, Matrix a) {
  a *= s;
  return a;
}

Matrix operator*(double s, Matrix a) {
  a *= cxd{s, 0.0};
  return a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cxd aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

cxd hs_inner(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw DimensionMismatch("hs_inner: shape mismatch");
  cxd s = 0.0;
  const auto& da = a.data();
  const auto& db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += std::conj(da[i]) * db[i];
  return s;
}

Matrix hermitian_part(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("hermitian_part: not square");
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return r;
}

}  // namespace qot

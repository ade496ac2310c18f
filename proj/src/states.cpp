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

#include "qot/states.hpp"

#include <cmath>
#include <utility>

#include "qot/eig.hpp"
#include "qot/errors.hpp"

namespace qot {

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.square()) throw InvalidState("density matrix not square");
  if (!m_.all_finite()) throw InvalidState("density matrix has non-finite entries");
  if (m_.hermiticity_defect() > 1e-12)
    throw InvalidState("density matrix not Hermitian");
  if (std::abs(m_.trace() - cxd{1.0, 0.0}) > 1e-12)
    throw InvalidState("density matrix trace deviates from 1");
  const HermitianEig eig = hermitian_eig(m_);
  if (eig.eigenvalues.front() < -1e-12)
    throw InvalidState("density matrix not positive semidefinite");
}

ObservableTuple::ObservableTuple(std::size_t dim, std::vector<Matrix> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (const Matrix& x : entries_) {
    if (x.rows() != dim_ || x.cols() != dim_)
      throw DimensionMismatch("observable tuple: entry dimension mismatch");
    if (!x.all_finite())
      throw InvalidState("observable has non-finite entries");
    if (x.hermiticity_defect() > 1e-12)
      throw InvalidState("observable not Hermitian");
  }
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m(0, 1) = cxd{0.0, -1.0};
  m(1, 0) = cxd{0.0, 1.0};
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

ObservableTuple pauli_tuple() {
  return ObservableTuple(2, {pauli_x(), pauli_y(), pauli_z()});
}

DensityMatrix basis_state(std::size_t dim, std::size_t k) {
  if (k >= dim) throw InvalidParameters("basis_state: index out of range");
  Matrix m(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix maximally_mixed(std::size_t dim) {
  Matrix m = Matrix::identity(dim);
  m *= cxd{1.0 / static_cast<double>(dim), 0.0};
  return DensityMatrix(m);
}

}  // namespace qot

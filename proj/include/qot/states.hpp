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

#include <cstddef>
#include <vector>

#include "qot/matrix.hpp"

namespace qot {

// Positive semidefinite trace-one Hermitian matrix. May be singular
// (rank < dim); kernel-aware routines downstream rely on that.
//
// Construction validates: hermiticity within 1e-12, eigenvalues ≥ −1e-12,
// |trace − 1| ≤ 1e-12. Error messages name the violated invariant so the
// CLI can surface them verbatim.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

// d-tuple of Hermitian matrices sharing one dimension (cost operators).
class ObservableTuple {
 public:
  ObservableTuple(std::size_t dim, std::vector<Matrix> entries);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const Matrix& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Matrix>& entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Matrix> entries_;
};

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// (X, Y, Z) as a qubit cost tuple.
ObservableTuple pauli_tuple();

// Rank-one state |e_k⟩⟨e_k| in the computational basis.
DensityMatrix basis_state(std::size_t dim, std::size_t k);

// Maximally mixed state I/dim.
DensityMatrix maximally_mixed(std::size_t dim);

}  // namespace qot

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

#include <vector>

#include "qot/matrix.hpp"

namespace qot {

// Spectral decomposition M = U diag(λ) U^† of a Hermitian matrix.
//
// Conventions (fixed so that identical inputs produce identical outputs):
//   - eigenvalues ascending, ties kept in sweep order (stable sort);
//   - each eigenvector column is rotated so its largest-magnitude component
//     is real and positive (first index wins on exact magnitude ties).
struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // unitary; column k pairs with eigenvalues[k]
};

// Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
// Intended for the desk-scale dimensions of this toolkit (n ≤ 32 for states,
// up to ~36 for Choi matrices); converges quadratically, high relative
// accuracy, no external dependency.
//
// Throws NonHermitianInput if ‖M − M^†‖ exceeds 1e-12·‖M‖ and
// ConvergenceFailure if the sweep cap is hit (does not happen for finite
// Hermitian input at these sizes).
HermitianEig hermitian_eig(const Matrix& m);

}  // namespace qot

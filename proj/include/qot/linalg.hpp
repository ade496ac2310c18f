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

#include "qot/eig.hpp"
#include "qot/matrix.hpp"

namespace qot {

// Relative eigenvalue threshold separating a true kernel from roundoff.
inline constexpr double kKernelCutoff = 1e-12;

// A^z for PSD A with the kernel convention: eigenvalues below
// cutoff·λmax are mapped to 0, the rest to λ^z = exp(z·ln λ).
// Requires Re z ≥ 0 from callers in scope (λ^z stays bounded).
// Throws NegativeEigenvalue if A has an eigenvalue below −cutoff·λmax.
Matrix matrix_power(const Matrix& a, cxd z, double kernel_cutoff = kKernelCutoff);

// A^z for negative real z, zero on the kernel (Moore-Penrose style power
// restricted to the support).
Matrix pinv_power(const Matrix& a, double z, double kernel_cutoff = kKernelCutoff);

// Orthogonal projection onto the span of eigenvectors with λ > cutoff·λmax.
Matrix support_projection(const Matrix& a, double kernel_cutoff = kKernelCutoff);

// Trace over one tensor factor of a (d1·d2)×(d1·d2) matrix laid out as
// first⊗second with the row-major Kronecker convention.
// over = 0 traces out the first factor (result d2×d2),
// over = 1 traces out the second (result d1×d1).
Matrix partial_trace(const Matrix& m, std::size_t d1, std::size_t d2,
                     std::size_t over);

// Schatten p-norm via singular values (p ≥ 1; p ∈ {1,2,4} used in scope).
double schatten_norm(const Matrix& a, int p);

// Singular values, descending.
std::vector<double> singular_values(const Matrix& a);

}  // namespace qot

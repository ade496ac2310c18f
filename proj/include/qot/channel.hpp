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
#include "qot/states.hpp"

namespace qot {

// Heisenberg-picture quantum channel Φ: B(H) → B(K) held as a finite Kraus
// family (v_j), v_j: K → H, i.e. each block is a dim_in×dim_out matrix with
// Σ_j v_j^† v_j = identity on K. The transport convention is Φ_*(σ) = ρ with
// Φ_*(σ) = Σ_j v_j σ v_j^†.
class KrausChannel {
 public:
  // unitality_tol bounds ‖Σ v^†v − I‖_F. The default covers exactly
  // constructed families; channels recovered from numerically optimized Choi
  // matrices pass a looser tolerance explicitly.
  KrausChannel(std::size_t dim_in, std::size_t dim_out,
               std::vector<Matrix> kraus, double unitality_tol = 1e-10);

  std::size_t dim_in() const { return dim_in_; }    // dimension of H
  std::size_t dim_out() const { return dim_out_; }  // dimension of K
  const std::vector<Matrix>& kraus() const { return kraus_; }

  static KrausChannel identity(std::size_t dim);
  // Conjugation channel of a unitary u (predual: τ ↦ u τ u^†).
  static KrausChannel from_unitary(const Matrix& u);

 private:
  std::size_t dim_in_, dim_out_;
  std::vector<Matrix> kraus_;
};

// Choi matrix on H⊗K (row-major Kronecker, H first):
// J = Σ_ab E_ab ⊗ Φ(E_ab). PSD with Tr_H J = I_K.
class ChoiMatrix {
 public:
  ChoiMatrix(std::size_t dim_in, std::size_t dim_out, Matrix j,
             double tol = 1e-10);

  // Skips the invariant checks. For solver iterates, which satisfy the
  // affine constraints only to solver accuracy (and arbitrarily badly on a
  // failed solve); certify() reports their actual residuals from scratch.
  static ChoiMatrix unchecked(std::size_t dim_in, std::size_t dim_out, Matrix j);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const Matrix& matrix() const { return j_; }

 private:
  struct UncheckedTag {};
  ChoiMatrix(UncheckedTag, std::size_t dim_in, std::size_t dim_out, Matrix j);

  std::size_t dim_in_, dim_out_;
  Matrix j_;
};

// Φ(x) = Σ_j v_j^† x v_j for x on H; unital, Hermiticity-preserving.
Matrix heisenberg_apply(const KrausChannel& ch, const Matrix& x);

// Φ_*(τ) = Σ_j v_j τ v_j^† for τ on K; trace-preserving, PSD-preserving.
Matrix predual_apply_matrix(const KrausChannel& ch, const Matrix& tau);
DensityMatrix predual_apply(const KrausChannel& ch, const DensityMatrix& tau);

// Kraus family (v_i w_j) of the composition Φ₂₃∘Φ₁₂, outer index i first.
KrausChannel compose(const KrausChannel& ch12, const KrausChannel& ch23);

// Vectorization convention: (w_j)_{(a,β)} = conj(⟨a|v_j|β⟩) with composite
// index (a,β) = a·dim_out + β, so that J = Σ_j w_j w_j^†. This is the one
// convention shared by the Choi objective and the SDP constraint map.
ChoiMatrix kraus_to_choi(const KrausChannel& ch);

// Inverse via eigendecomposition of J, keeping eigenvalues above
// rank_cutoff·λmax. Throws NotPsd for indefinite J beyond tolerance and
// BrokenUnitality if the recovered family misses Σ v^†v = I by more than 1e-8.
KrausChannel choi_to_kraus(const ChoiMatrix& j, double rank_cutoff = 1e-12);

// Channel with Φ(x) = tr(ρx)·I and Φ_*(τ) = tr(τ)·ρ: the canonical feasible
// point for any marginal pair. Kraus family {√λ_α |e_α⟩⟨f_β|} over the
// spectral pairs of ρ and the computational basis of K.
KrausChannel replacer_channel(const DensityMatrix& rho, std::size_t dim_out);

// ‖Φ_*(σ) − ρ‖₁, the marginal defect used by all marginal tolerance gates.
double marginal_gap(const KrausChannel& ch, const DensityMatrix& rho,
                    const DensityMatrix& sigma);

}  // namespace qot

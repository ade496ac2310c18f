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

#include "qot/channel.hpp"
#include "qot/matrix.hpp"
#include "qot/states.hpp"

namespace qot {

// Tolerance for accepting (channel, rho, sigma) triples as marginal
// consistent; numerically optimized channels satisfy the constraint only to
// solver accuracy.
inline constexpr double kMarginalTol = 1e-8;

// KMS pairing ⟨a,b⟩_ρ = tr(a^† ρ^{1/2} b ρ^{1/2}). Real for Hermitian a, b;
// positive semidefinite as a form, degenerate when ρ is singular.
double kms_inner(const Matrix& a, const Matrix& b, const DensityMatrix& rho);

// Hilbert-Schmidt element with optional support projections attached;
// when present, P_left · matrix · P_right = matrix holds within 1e-10.
struct HSElement {
  Matrix matrix;
  Matrix left_support;
  Matrix right_support;
  bool has_supports = false;
};

// i_ρ(x) = ρ^{1/4} x ρ^{1/4}: the support-aware embedding of an observable
// into Hilbert-Schmidt space; ‖i_ρ(x)‖₂² = ⟨x,x⟩_ρ.
HSElement embed(const DensityMatrix& rho, const Matrix& x);

// The Hilbert-Schmidt extension of the channel action on embedded elements:
// A ↦ σ^{1/4} Φ(ρ₊^{−1/4} A ρ₊^{−1/4}) σ^{1/4}. Requires A supported by ρ
// (P_ρ A P_ρ = A within 1e-8) and marginal consistency; contracts the
// Hilbert-Schmidt norm.
HSElement phi2_apply(const KrausChannel& ch, const DensityMatrix& rho,
                     const DensityMatrix& sigma, const HSElement& a);

// Transport cost split into its parts:
//   total = Σ_k (‖x_k‖²_ρ + ‖y_k‖²_σ − 2⟨Φ(x_k), y_k⟩_σ),
// with all three norms in the KMS form. total carries the raw value (the
// theory guarantees ≥ 0; roundoff can leave a tiny negative, which callers
// clamp when reporting squared distances).
struct CostReport {
  double total = 0.0;
  std::vector<double> per_operator;
  std::vector<double> norm_terms_x;
  std::vector<double> norm_terms_y;
  std::vector<double> cross_terms;

  double clamped_total() const { return total < 0.0 ? 0.0 : total; }
};

CostReport cost(const KrausChannel& ch, const DensityMatrix& rho,
                const DensityMatrix& sigma, const ObservableTuple& xs,
                const ObservableTuple& ys, double marginal_tol = kMarginalTol);

// Cost linearized in the Choi variable:
//   cost(Φ) = constant + ⟨objective, J_Φ⟩_HS
// with constant = Σ_k (⟨x_k,x_k⟩_ρ + ⟨y_k,y_k⟩_σ) and
// objective = −2 Σ_k x_kᵀ ⊗ (σ^{1/2} y_k σ^{1/2}); transpose taken in the
// computational basis, matching the Choi vectorization convention.
struct ChoiCostForm {
  double constant = 0.0;
  Matrix objective;
};

ChoiCostForm choi_cost_form(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const ObservableTuple& xs, const ObservableTuple& ys);

}  // namespace qot

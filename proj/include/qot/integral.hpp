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

#include "qot/cost.hpp"

namespace qot {

// Element of the direct sum ⊕_j S²(K;H): one dim_in×dim_out block per Kraus
// index, with the natural squared norm Σ_j ‖block_j‖₂².
struct OperatorTuple {
  std::vector<Matrix> blocks;

  double norm() const;
  OperatorTuple& operator-=(const OperatorTuple& o);
};

// y ↦ (v_j y)_j, an isometry from S²(K) into the direct sum.
OperatorTuple l_apply(const KrausChannel& ch, const Matrix& y);

// A ↦ (A ρ₊^{−1/2} v_j σ^{1/2})_j. One pseudo-inverse formula realizes both
// defining clauses of the partial isometry: on A = xρ^{1/2} it produces
// (x v_j σ^{1/2})_j because the Kraus blocks satisfy P_ρ v_j σ^{1/2} =
// v_j σ^{1/2}, and it vanishes whenever A·P_ρ = 0. Norm contract:
// ‖output‖₂ = ‖A·P_ρ‖₂.
OperatorTuple r_apply(const KrausChannel& ch, const DensityMatrix& rho,
                      const DensityMatrix& sigma, const Matrix& a,
                      double marginal_tol = kMarginalTol);

// Adjoint of l_apply: (z_j)_j ↦ Σ_j v_j^† z_j.
Matrix lstar_apply(const KrausChannel& ch, const OperatorTuple& zs);

// Composite Gauss-Legendre rule for the probability measure
// dμ/dt = 2/cosh(2πt) truncated to [−T, T]; weights already carry the
// density. Nodes and weights are exactly symmetric about 0 by mirrored
// construction. Tail mass outside [−T, T] is bounded by (2/π)e^{−2πT}.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double truncation = 0.0;
  std::size_t panels = 0;
  std::size_t order = 0;
  double tail_bound = 0.0;

  double weight_sum() const;
};

QuadratureRule build_quadrature(double truncation = 4.0, std::size_t panels = 64,
                                std::size_t order = 8);

// Strip-contour sanity check with f(z) = exp(az): the boundary averages of f
// against μ must reproduce f(0) = 1. Concretely rhs = cosh(a/4)·∫cos(at)dμ.
struct ResidueCheck {
  double lhs = 1.0;
  double rhs = 0.0;
  double gap = 0.0;
};

ResidueCheck residue_selfcheck(double a, const QuadratureRule& rule);

// ‖L(σ^{1/4+it} y σ^{1/4−it}) − R(ρ^{1/4+it} x ρ^{1/4−it})‖₂², the density
// whose μ-integral reproduces the transport cost of a single operator pair.
double integrand(double t, const KrausChannel& ch, const DensityMatrix& rho,
                 const DensityMatrix& sigma, const Matrix& x, const Matrix& y,
                 double marginal_tol = kMarginalTol);

// Quadrature check of the cost identity. lhs is the KMS-form cost, rhs the
// μ-integral of the integrand summed over the tuple; rhs_embedded recomputes
// the same integral through the embedded elements
// σ^{it} i_σ(y) σ^{−it} and ρ^{it} i_ρ(x) ρ^{−it}, which must agree with rhs
// to well below 1e-10 (the two routes coincide on supports).
struct IntegralRepReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double rhs_embedded = 0.0;
  double gap = 0.0;
};

IntegralRepReport verify_integral_rep(const KrausChannel& ch,
                                      const DensityMatrix& rho,
                                      const DensityMatrix& sigma,
                                      const ObservableTuple& xs,
                                      const ObservableTuple& ys,
                                      const QuadratureRule& rule,
                                      double marginal_tol = kMarginalTol);

// Cost subadditivity along a two-channel chain
// Φ₁₂: B(H₁)→B(H₂), Φ₂₃: B(H₂)→B(H₃) with marginals ρ1 ← ρ2 ← ρ3:
// slack = √c12 + √c23 − √c13 must be ≥ 0 up to roundoff.
struct SubadditivityReport {
  double c12 = 0.0;
  double c23 = 0.0;
  double c13 = 0.0;
  double slack = 0.0;
};

SubadditivityReport verify_subadditivity(
    const KrausChannel& ch12, const KrausChannel& ch23,
    const DensityMatrix& rho1, const DensityMatrix& rho2,
    const DensityMatrix& rho3, const ObservableTuple& xs1,
    const ObservableTuple& xs2, const ObservableTuple& xs3);

}  // namespace qot

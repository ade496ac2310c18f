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
#include "qot/states.hpp"

namespace qot {

// Convex program for the Wasserstein divergence in the Choi variable J:
//   minimize  objective_constant + ⟨objective, J⟩_HS
//   subject to  Tr_H J = I_K   (unitality, dim_out² real constraints)
//               Tr_K[J(I⊗σ)] = ρᵀ   (marginal, dim_in² real constraints)
//               J ⪰ 0.
// Constraints are expanded over an orthonormal Hermitian basis, so the rows
// may share one trace identity and the system can be rank-deficient; the
// solver's affine projection uses a least-squares pseudo-inverse throughout.
struct SdpProblem {
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  double objective_constant = 0.0;
  Matrix objective;                                  // Hermitian on H⊗K
  std::vector<std::pair<Matrix, double>> constraints;  // tr(G_i J) = b_i
  Matrix warm_start;  // replacer Choi ρᵀ⊗I: feasible for every instance

  // Instance data kept for certification (round-trip cost checks).
  DensityMatrix rho;
  DensityMatrix sigma;
  ObservableTuple xs;
  ObservableTuple ys;
};

struct SolverParams {
  double step = 1.0;              // ADMM penalty τ
  double over_relaxation = 1.6;
  std::size_t max_iter = 50000;
  double tol_primal = 1e-8;
  double tol_dual = 1e-8;
  double tol_gap = 1e-6;
};

enum class SolveStatus { Optimal, MaxIterations, NumericalFailure };

struct SdpSolution {
  ChoiMatrix choi;
  double optimal_cost = 0.0;   // objective_constant + ⟨objective, J⟩
  double divergence = 0.0;     // √max(0, optimal_cost)
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double duality_gap = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::MaxIterations;
  std::vector<double> dual_y;  // multipliers of the affine constraints
};

SdpProblem build_sdp(const DensityMatrix& rho, const DensityMatrix& sigma,
                     const ObservableTuple& xs, const ObservableTuple& ys);

// Operator-splitting solver: alternate exact projection onto the affine
// constraint set (precomputed least-squares factorization, linear objective
// folded into the shift) with projection onto the PSD cone (eigenvalue
// clipping), with over-relaxation. Deterministic given (problem, params).
SdpSolution solve(const SdpProblem& problem, const SolverParams& params = {});

// Wasserstein divergence W(ρ,σ) for cost tuple xs (ys = xs): builds and
// solves the program above. Symmetry W(ρ,σ) = W(σ,ρ) is a property to test,
// not an assumption; each direction is its own solve.
SdpSolution divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                       const ObservableTuple& xs,
                       const SolverParams& params = {});

// From-scratch certification of a solve: recomputed constraint residuals,
// PSD margins of the primal and dual slack matrices, complementary
// slackness, duality gap, and the cost of the recovered Kraus family.
struct CertificateReport {
  double constraint_residual = 0.0;  // ‖A svec(J) − b‖ / (1 + ‖b‖)
  double max_constraint_violation = 0.0;
  double psd_margin = 0.0;           // most negative eigenvalue of J
  double dual_psd_margin = 0.0;      // most negative eigenvalue of C − A*y
  double comp_slack = 0.0;           // |⟨J, C − A*y⟩| normalized
  double duality_gap = 0.0;
  double roundtrip_cost = 0.0;       // KMS cost of choi_to_kraus(J)
  double roundtrip_gap = 0.0;
  bool ok_constraints = false;
  bool ok_psd = false;
  bool ok_gap = false;
  bool ok_roundtrip = false;
  bool ok() const { return ok_constraints && ok_psd && ok_gap && ok_roundtrip; }
};

CertificateReport certify(const SdpSolution& solution, const SdpProblem& problem);

// Isometric real coordinates of a Hermitian matrix: diagonal entries, then
// √2·(Re, Im) of the upper triangle row-major; ‖svec(J)‖₂ = ‖J‖_F and
// tr(G J) = svec(G)·svec(J) for Hermitian G, J.
std::vector<double> svec(const Matrix& h);
Matrix smat(const std::vector<double>& v, std::size_t n);

}  // namespace qot

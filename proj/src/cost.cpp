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

#include "qot/cost.hpp"

#include <string>

#include "qot/errors.hpp"
#include "qot/linalg.hpp"

namespace qot {

double kms_inner(const Matrix& a, const Matrix& b, const DensityMatrix& rho) {
  const std::size_t n = rho.dim();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
    throw DimensionMismatch("kms_inner: dimension mismatch");
  const Matrix half = matrix_power(rho.matrix(), cxd{0.5, 0.0});
  return hs_inner(a, half * b * half).real();
}

HSElement embed(const DensityMatrix& rho, const Matrix& x) {
  const std::size_t n = rho.dim();
  if (x.rows() != n || x.cols() != n)
    throw DimensionMismatch("embed: dimension mismatch");
  const Matrix quarter = matrix_power(rho.matrix(), cxd{0.25, 0.0});
  HSElement out;
  out.matrix = quarter * x * quarter;
  out.left_support = support_projection(rho.matrix());
  out.right_support = out.left_support;
  out.has_supports = true;
  return out;
}

HSElement phi2_apply(const KrausChannel& ch, const DensityMatrix& rho,
                     const DensityMatrix& sigma, const HSElement& a) {
  if (a.matrix.rows() != ch.dim_in() || a.matrix.cols() != ch.dim_in())
    throw DimensionMismatch("phi2_apply: element dimension mismatch");
  const double gap = marginal_gap(ch, rho, sigma);
  if (gap > kMarginalTol)
    throw MarginalMismatch("phi2_apply: marginal gap " + std::to_string(gap));

  const Matrix p = support_projection(rho.matrix());
  if ((p * a.matrix * p - a.matrix).frobenius_norm() > 1e-8)
    throw SupportViolation("phi2_apply: element not supported by rho");

  const Matrix inv_quarter = pinv_power(rho.matrix(), -0.25);
  const Matrix sig_quarter = matrix_power(sigma.matrix(), cxd{0.25, 0.0});
  HSElement out;
  out.matrix = sig_quarter *
               heisenberg_apply(ch, inv_quarter * a.matrix * inv_quarter) *
               sig_quarter;
  out.left_support = support_projection(sigma.matrix());
  out.right_support = out.left_support;
  out.has_supports = true;
  return out;
}

CostReport cost(const KrausChannel& ch, const DensityMatrix& rho,
                const DensityMatrix& sigma, const ObservableTuple& xs,
                const ObservableTuple& ys, double marginal_tol) {
  if (xs.size() != ys.size())
    throw LengthMismatch("cost: tuples have different lengths");
  if (xs.dim() != ch.dim_in() || ys.dim() != ch.dim_out())
    throw DimensionMismatch("cost: tuple dimensions mismatch channel");
  const double gap = marginal_gap(ch, rho, sigma);
  if (gap > marginal_tol)
    throw MarginalMismatch("cost: marginal gap " + std::to_string(gap));

  const Matrix rho_half = matrix_power(rho.matrix(), cxd{0.5, 0.0});
  const Matrix sig_half = matrix_power(sigma.matrix(), cxd{0.5, 0.0});

  CostReport report;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Matrix& x = xs[k];
    const Matrix& y = ys[k];
    const double nx = hs_inner(x, rho_half * x * rho_half).real();
    const double ny = hs_inner(y, sig_half * y * sig_half).real();
    const double cross =
        hs_inner(heisenberg_apply(ch, x), sig_half * y * sig_half).real();
    const double term = nx + ny - 2.0 * cross;
    report.norm_terms_x.push_back(nx);
    report.norm_terms_y.push_back(ny);
    report.cross_terms.push_back(cross);
    report.per_operator.push_back(term);
    report.total += term;
  }
  return report;
}

ChoiCostForm choi_cost_form(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const ObservableTuple& xs, const ObservableTuple& ys) {
  if (xs.size() != ys.size())
    throw LengthMismatch("choi_cost_form: tuples have different lengths");
  const std::size_t din = rho.dim(), dout = sigma.dim();
  if (xs.dim() != din || ys.dim() != dout)
    throw DimensionMismatch("choi_cost_form: tuple dimensions mismatch states");

  const Matrix rho_half = matrix_power(rho.matrix(), cxd{0.5, 0.0});
  const Matrix sig_half = matrix_power(sigma.matrix(), cxd{0.5, 0.0});

  ChoiCostForm form;
  form.objective = Matrix(din * dout, din * dout);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Matrix& x = xs[k];
    const Matrix& y = ys[k];
    form.constant += hs_inner(x, rho_half * x * rho_half).real() +
                     hs_inner(y, sig_half * y * sig_half).real();
    form.objective -= 2.0 * kron(x.transpose(), sig_half * y * sig_half);
  }
  return form;
}

}  // namespace qot

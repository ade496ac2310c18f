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

#include "qot/integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qot/eig.hpp"
#include "qot/errors.hpp"
#include "qot/linalg.hpp"

namespace qot {

namespace {

// One eigendecomposition per state per instance; all fractional powers at
// quadrature nodes are reassembled from it by diagonal scaling.
struct SpectralCache {
  Matrix u, uh;
  std::vector<double> quarter;  // λ^{1/4}, zero below the kernel cutoff
  std::vector<double> loglam;   // ln λ, zero below the kernel cutoff
  std::vector<char> keep;

  explicit SpectralCache(const Matrix& psd) {
    const HermitianEig eig = hermitian_eig(psd);
    u = eig.eigenvectors;
    uh = u.adjoint();
    const std::size_t n = eig.eigenvalues.size();
    const double lmax = eig.eigenvalues.back();
    quarter.assign(n, 0.0);
    loglam.assign(n, 0.0);
    keep.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const double lam = eig.eigenvalues[i];
      if (lam > kKernelCutoff * lmax) {
        keep[i] = 1;
        quarter[i] = std::pow(lam, 0.25);
        loglam[i] = std::log(lam);
      }
    }
  }

  Matrix to_eigenbasis(const Matrix& x) const { return uh * x * u; }

  // U diag(q_a e^{itl_a}) X̃ diag(q_b e^{−itl_b}) U^†; for with_quarter=false
  // the diagonal factors are pure phases (the input already carries the
  // quarter powers).
  Matrix sandwich(const Matrix& xtilde, double t, bool with_quarter) const {
    const std::size_t n = xtilde.rows();
    Matrix s(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!keep[b]) continue;
        const double angle = t * (loglam[a] - loglam[b]);
        cxd factor{std::cos(angle), std::sin(angle)};
        if (with_quarter) factor *= quarter[a] * quarter[b];
        s(a, b) = factor * xtilde(a, b);
      }
    }
    return u * s * uh;
  }
};

double block_distance_sq(const std::vector<Matrix>& kraus,
                         const std::vector<Matrix>& r_blocks, const Matrix& y,
                         const Matrix& x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < kraus.size(); ++j) {
    const Matrix diff = kraus[j] * y - x * r_blocks[j];
    const double f = diff.frobenius_norm();
    sum += f * f;
  }
  return sum;
}

std::vector<Matrix> r_factor_blocks(const KrausChannel& ch,
                                    const DensityMatrix& rho,
                                    const DensityMatrix& sigma) {
  const Matrix rho_inv_half = pinv_power(rho.matrix(), -0.5);
  const Matrix sig_half = matrix_power(sigma.matrix(), cxd{0.5, 0.0});
  std::vector<Matrix> blocks;
  blocks.reserve(ch.kraus().size());
  for (const Matrix& v : ch.kraus())
    blocks.push_back(rho_inv_half * v * sig_half);
  return blocks;
}

void require_marginal(const KrausChannel& ch, const DensityMatrix& rho,
                      const DensityMatrix& sigma, double tol,
                      const char* where) {
  const double gap = marginal_gap(ch, rho, sigma);
  if (gap > tol)
    throw MarginalMismatch(std::string(where) + ": marginal gap " +
                           std::to_string(gap));
}

// Reference Gauss-Legendre rule on [−1, 1]: Newton iteration on the Legendre
// recurrence; nodes exactly symmetric by mirrored storage.
void gauss_legendre_reference(std::size_t order, std::vector<double>& x,
                              std::vector<double>& w) {
  const std::size_t n = order;
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double xi = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                         (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = xi;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * xi * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (xi * p1 - p0) / (xi * xi - 1.0);
      const double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    if (std::abs(xi) < 1e-14) xi = 0.0;  // odd-order center root
    x[i] = -xi;
    x[n - 1 - i] = xi;
    const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
}

double sech_density(double t) { return 2.0 / std::cosh(2.0 * std::numbers::pi * t); }

}  // namespace

double OperatorTuple::norm() const {
  double s = 0.0;
  for (const Matrix& b : blocks) {
    const double f = b.frobenius_norm();
    s += f * f;
  }
  return std::sqrt(s);
}

OperatorTuple& OperatorTuple::operator-=(const OperatorTuple& o) {
  if (blocks.size() != o.blocks.size())
    throw LengthMismatch("operator tuple: block count mismatch");
  for (std::size_t j = 0; j < blocks.size(); ++j) blocks[j] -= o.blocks[j];
  return *this;
}

OperatorTuple l_apply(const KrausChannel& ch, const Matrix& y) {
  if (y.rows() != ch.dim_out() || y.cols() != ch.dim_out())
    throw DimensionMismatch("l_apply: element dimension mismatch");
  OperatorTuple out;
  out.blocks.reserve(ch.kraus().size());
  for (const Matrix& v : ch.kraus()) out.blocks.push_back(v * y);
  return out;
}

OperatorTuple r_apply(const KrausChannel& ch, const DensityMatrix& rho,
                      const DensityMatrix& sigma, const Matrix& a,
                      double marginal_tol) {
  if (a.rows() != ch.dim_in() || a.cols() != ch.dim_in())
    throw DimensionMismatch("r_apply: element dimension mismatch");
  require_marginal(ch, rho, sigma, marginal_tol, "r_apply");
  OperatorTuple out;
  for (const Matrix& b : r_factor_blocks(ch, rho, sigma))
    out.blocks.push_back(a * b);
  return out;
}

Matrix lstar_apply(const KrausChannel& ch, const OperatorTuple& zs) {
  if (zs.blocks.size() != ch.kraus().size())
    throw DimensionMismatch("lstar_apply: block count mismatch");
  Matrix out(ch.dim_out(), ch.dim_out());
  for (std::size_t j = 0; j < zs.blocks.size(); ++j)
    out += ch.kraus()[j].adjoint() * zs.blocks[j];
  return out;
}

double QuadratureRule::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

QuadratureRule build_quadrature(double truncation, std::size_t panels,
                                std::size_t order) {
  if (!(truncation > 0.0))
    throw InvalidParameters("build_quadrature: truncation must be positive");
  if (panels < 1) throw InvalidParameters("build_quadrature: panels must be >= 1");
  if (order < 2) throw InvalidParameters("build_quadrature: order must be >= 2");

  std::vector<double> gx, gw;
  gauss_legendre_reference(order, gx, gw);

  const double width = 2.0 * truncation / static_cast<double>(panels);
  const double hw = 0.5 * width;

  // Collect the strictly positive half plus an optional center node, then
  // mirror. This keeps nodes and weights bitwise symmetric about 0.
  std::vector<std::pair<double, double>> half;  // (t, panel weight)
  double center_weight = -1.0;

  const std::size_t first_right = (panels + 1) / 2;
  if (panels % 2 == 1) {
    // Middle panel centered at 0.
    for (std::size_t i = 0; i < order; ++i) {
      const double t = hw * gx[i];
      if (t > 0.0)
        half.emplace_back(t, hw * gw[i]);
      else if (gx[i] == 0.0)
        center_weight = hw * gw[i];
    }
  }
  for (std::size_t k = first_right; k < panels; ++k) {
    const double c = (static_cast<double>(k) + 0.5) * width - truncation;
    for (std::size_t i = 0; i < order; ++i)
      half.emplace_back(c + hw * gx[i], hw * gw[i]);
  }
  std::sort(half.begin(), half.end());

  QuadratureRule rule;
  rule.truncation = truncation;
  rule.panels = panels;
  rule.order = order;
  rule.tail_bound = (2.0 / std::numbers::pi) *
                    std::exp(-2.0 * std::numbers::pi * truncation);

  const std::size_t h = half.size();
  for (std::size_t i = 0; i < h; ++i) {
    const auto& [t, pw] = half[h - 1 - i];
    rule.nodes.push_back(-t);
    rule.weights.push_back(pw * sech_density(t));
  }
  if (center_weight >= 0.0) {
    rule.nodes.push_back(0.0);
    rule.weights.push_back(center_weight * sech_density(0.0));
  }
  for (std::size_t i = 0; i < h; ++i) {
    const auto& [t, pw] = half[i];
    rule.nodes.push_back(t);
    rule.weights.push_back(pw * sech_density(t));
  }
  return rule;
}

ResidueCheck residue_selfcheck(double a, const QuadratureRule& rule) {
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    integral += rule.weights[i] * std::cos(a * rule.nodes[i]);
  ResidueCheck out;
  out.lhs = 1.0;
  out.rhs = std::cosh(0.25 * a) * integral;
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

double integrand(double t, const KrausChannel& ch, const DensityMatrix& rho,
                 const DensityMatrix& sigma, const Matrix& x, const Matrix& y,
                 double marginal_tol) {
  require_marginal(ch, rho, sigma, marginal_tol, "integrand");
  const cxd zp{0.25, t}, zm{0.25, -t};
  const Matrix ys =
      matrix_power(sigma.matrix(), zp) * y * matrix_power(sigma.matrix(), zm);
  const Matrix xs =
      matrix_power(rho.matrix(), zp) * x * matrix_power(rho.matrix(), zm);
  OperatorTuple diff = l_apply(ch, ys);
  diff -= r_apply(ch, rho, sigma, xs, marginal_tol);
  const double n = diff.norm();
  return n * n;
}

IntegralRepReport verify_integral_rep(const KrausChannel& ch,
                                      const DensityMatrix& rho,
                                      const DensityMatrix& sigma,
                                      const ObservableTuple& xs,
                                      const ObservableTuple& ys,
                                      const QuadratureRule& rule,
                                      double marginal_tol) {
  if (xs.size() != ys.size())
    throw LengthMismatch("verify_integral_rep: tuples have different lengths");

  IntegralRepReport report;
  report.lhs = cost(ch, rho, sigma, xs, ys, marginal_tol).total;

  const SpectralCache cr(rho.matrix());
  const SpectralCache cs(sigma.matrix());
  const std::vector<Matrix> r_blocks = r_factor_blocks(ch, rho, sigma);

  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Matrix xt = cr.to_eigenbasis(xs[k]);
    const Matrix yt = cs.to_eigenbasis(ys[k]);

    // Quarter-weighted copies: the embedded elements in the eigenbasis.
    Matrix xe = xt, ye = yt;
    for (std::size_t a = 0; a < xe.rows(); ++a)
      for (std::size_t b = 0; b < xe.cols(); ++b)
        xe(a, b) *= cr.quarter[a] * cr.quarter[b];
    for (std::size_t a = 0; a < ye.rows(); ++a)
      for (std::size_t b = 0; b < ye.cols(); ++b)
        ye(a, b) *= cs.quarter[a] * cs.quarter[b];

    // Deterministic ordered sum over nodes regardless of any outer
    // parallelism: ascending node order, fixed block order.
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = rule.nodes[i];
      const double w = rule.weights[i];
      const Matrix yb = cs.sandwich(yt, t, /*with_quarter=*/true);
      const Matrix xb = cr.sandwich(xt, t, /*with_quarter=*/true);
      report.rhs += w * block_distance_sq(ch.kraus(), r_blocks, yb, xb);

      const Matrix ye_t = cs.sandwich(ye, t, /*with_quarter=*/false);
      const Matrix xe_t = cr.sandwich(xe, t, /*with_quarter=*/false);
      report.rhs_embedded +=
          w * block_distance_sq(ch.kraus(), r_blocks, ye_t, xe_t);
    }
  }
  report.gap = std::abs(report.lhs - report.rhs);
  return report;
}

SubadditivityReport verify_subadditivity(
    const KrausChannel& ch12, const KrausChannel& ch23,
    const DensityMatrix& rho1, const DensityMatrix& rho2,
    const DensityMatrix& rho3, const ObservableTuple& xs1,
    const ObservableTuple& xs2, const ObservableTuple& xs3) {
  SubadditivityReport report;
  report.c12 = cost(ch12, rho1, rho2, xs1, xs2).total;
  report.c23 = cost(ch23, rho2, rho3, xs2, xs3).total;
  const KrausChannel ch13 = compose(ch12, ch23);
  report.c13 = cost(ch13, rho1, rho3, xs1, xs3).total;
  const auto root = [](double c) { return std::sqrt(std::max(c, 0.0)); };
  report.slack = root(report.c12) + root(report.c23) - root(report.c13);
  return report;
}

}  // namespace qot

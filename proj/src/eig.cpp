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

#include "qot/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qot/errors.hpp"

namespace qot {

namespace {

// Frobenius norm of the strict off-diagonal part.
double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Eigen-pairs of the 2x2 Hermitian block [[alpha, beta], [conj(beta), gamma]].
// Returns the unitary columns (w_minus | w_plus) and eigenvalues lo <= hi.
// delta = lambda_plus - alpha is computed cancellation-free: when alpha is the
// larger diagonal entry, the naive difference r - (alpha-gamma)/2 loses digits,
// so the equivalent quotient |beta|^2 / (r + (alpha-gamma)/2) is used instead.
struct Block2 {
  double lo, hi;
  cxd w_minus[2];
  cxd w_plus[2];
};

Block2 diagonalize_block(double alpha, cxd beta, double gamma) {
  Block2 out;
  const double half_gap = 0.5 * (alpha - gamma);
  const double r = std::hypot(half_gap, std::abs(beta));
  const double mid = 0.5 * (alpha + gamma);
  out.lo = mid - r;
  out.hi = mid + r;

  double delta;  // lambda_plus - alpha
  if (half_gap >= 0.0) {
    delta = std::norm(beta) / (r + half_gap);
  } else {
    delta = r - half_gap;
  }

  cxd vp0 = beta;
  cxd vp1 = cxd{delta, 0.0};
  const double np = std::sqrt(std::norm(vp0) + delta * delta);
  vp0 /= np;
  vp1 /= np;

  // Orthogonal partner: (-delta, conj(beta)) normalized by the same factor.
  out.w_plus[0] = vp0;
  out.w_plus[1] = vp1;
  out.w_minus[0] = cxd{-delta, 0.0} / np;
  out.w_minus[1] = std::conj(beta) / np;
  return out;
}

}  // namespace

HermitianEig hermitian_eig(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("hermitian_eig: matrix not square");
  if (!m.all_finite()) throw InvalidState("hermitian_eig: non-finite entries");
  const std::size_t n = m.rows();

  const double scale = m.frobenius_norm();
  if (m.hermiticity_defect() > 1e-12 * std::max(scale, 1e-300))
    throw NonHermitianInput("hermitian_eig: symmetry tolerance violated");

  // Work on the exact Hermitian part so the iteration preserves symmetry.
  Matrix a = hermitian_part(m);
  Matrix u = Matrix::identity(n);

  const double stop = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  constexpr int kMaxSweeps = 64;
  bool converged = (n <= 1) || offdiag_norm(a) <= stop;

  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cxd beta = a(p, q);
        if (beta == cxd{0.0, 0.0}) continue;
        const Block2 blk =
            diagonalize_block(a(p, p).real(), beta, a(q, q).real());

        // A <- G^† A G restricted to rows/cols p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const cxd akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * blk.w_minus[0] + akq * blk.w_minus[1];
          a(k, q) = akp * blk.w_plus[0] + akq * blk.w_plus[1];
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cxd apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(blk.w_minus[0]) * apk +
                    std::conj(blk.w_minus[1]) * aqk;
          a(q, k) =
              std::conj(blk.w_plus[0]) * apk + std::conj(blk.w_plus[1]) * aqk;
        }
        // The rotation annihilates the pivot pair and leaves real diagonals.
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = blk.lo;
        a(q, q) = blk.hi;

        for (std::size_t k = 0; k < n; ++k) {
          const cxd ukp = u(k, p), ukq = u(k, q);
          u(k, p) = ukp * blk.w_minus[0] + ukq * blk.w_minus[1];
          u(k, q) = ukp * blk.w_plus[0] + ukq * blk.w_plus[1];
        }
      }
    }
    converged = offdiag_norm(a) <= stop;
  }
  if (!converged)
    throw ConvergenceFailure("hermitian_eig: sweep cap exceeded");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.eigenvalues[j] = a(src, src).real();

    // Phase convention: largest-magnitude component real positive.
    std::size_t kmax = 0;
    double best = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double mag = std::abs(u(k, src));
      if (mag > best) {
        best = mag;
        kmax = k;
      }
    }
    cxd phase{1.0, 0.0};
    if (best > 0.0) phase = std::conj(u(kmax, src)) / best;
    for (std::size_t k = 0; k < n; ++k)
      out.eigenvectors(k, j) = u(k, src) * phase;
  }
  return out;
}

}  // namespace qot

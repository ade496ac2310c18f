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

#include "qot/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "qot/errors.hpp"

namespace qot {

namespace {

// U · diag(f(λ)) · U^† with f applied only above the kernel cutoff.
template <typename F>
Matrix spectral_apply(const Matrix& a, double kernel_cutoff, F&& f,
                      bool check_psd) {
  const HermitianEig eig = hermitian_eig(a);
  const std::size_t n = a.rows();
  const double lmax = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
  const double keep_above = kernel_cutoff * lmax;

  if (check_psd) {
    for (double lam : eig.eigenvalues)
      if (lam < -keep_above)
        throw NegativeEigenvalue("matrix power: input not PSD");
  }

  // Scaled = U with column k multiplied by f(λ_k); result = Scaled · U^†.
  Matrix scaled(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(eig.eigenvalues[k] > keep_above)) continue;
    const cxd fk = f(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i)
      scaled(i, k) = eig.eigenvectors(i, k) * fk;
  }
  return scaled * eig.eigenvectors.adjoint();
}

}  // namespace

Matrix matrix_power(const Matrix& a, cxd z, double kernel_cutoff) {
  return spectral_apply(
      a, kernel_cutoff,
      [z](double lam) { return std::exp(z * std::log(lam)); },
      /*check_psd=*/true);
}

Matrix pinv_power(const Matrix& a, double z, double kernel_cutoff) {
  return spectral_apply(
      a, kernel_cutoff,
      [z](double lam) { return cxd{std::exp(z * std::log(lam)), 0.0}; },
      /*check_psd=*/true);
}

Matrix support_projection(const Matrix& a, double kernel_cutoff) {
  return spectral_apply(
      a, kernel_cutoff, [](double) { return cxd{1.0, 0.0}; },
      /*check_psd=*/false);
}

Matrix partial_trace(const Matrix& m, std::size_t d1, std::size_t d2,
                     std::size_t over) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw DimensionMismatch("partial_trace: matrix is not (d1·d2)×(d1·d2)");
  if (over > 1) throw InvalidParameters("partial_trace: factor index must be 0 or 1");

  if (over == 0) {
    Matrix r(d2, d2);
    for (std::size_t b = 0; b < d2; ++b)
      for (std::size_t c = 0; c < d2; ++c) {
        cxd s = 0.0;
        for (std::size_t a = 0; a < d1; ++a)
          s += m(a * d2 + b, a * d2 + c);
        r(b, c) = s;
      }
    return r;
  }
  Matrix r(d1, d1);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d1; ++b) {
      cxd s = 0.0;
      for (std::size_t k = 0; k < d2; ++k)
        s += m(a * d2 + k, b * d2 + k);
      r(a, b) = s;
    }
  return r;
}

std::vector<double> singular_values(const Matrix& a) {
  // Eigenvalues of A^†A are the squared singular values; clip the tiny
  // negatives produced by roundoff.
  const HermitianEig eig = hermitian_eig(a.adjoint() * a);
  std::vector<double> sv(eig.eigenvalues.size());
  for (std::size_t i = 0; i < sv.size(); ++i) {
    const double lam = eig.eigenvalues[eig.eigenvalues.size() - 1 - i];
    sv[i] = std::sqrt(std::max(lam, 0.0));
  }
  return sv;
}

double schatten_norm(const Matrix& a, int p) {
  if (p < 1) throw InvalidParameters("schatten_norm: p must be >= 1");
  if (p == 2) return a.frobenius_norm();
  double s = 0.0;
  for (double sv : singular_values(a)) s += std::pow(sv, p);
  return std::pow(s, 1.0 / p);
}

}  // namespace qot

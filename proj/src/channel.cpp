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

#include "qot/channel.hpp"

#include <cmath>
#include <utility>

#include "qot/eig.hpp"
#include "qot/errors.hpp"
#include "qot/linalg.hpp"

namespace qot {

KrausChannel::KrausChannel(std::size_t dim_in, std::size_t dim_out,
                           std::vector<Matrix> kraus, double unitality_tol)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InvalidState("channel: empty Kraus family");
  Matrix sum(dim_out_, dim_out_);
  for (const Matrix& v : kraus_) {
    if (v.rows() != dim_in_ || v.cols() != dim_out_)
      throw DimensionMismatch("channel: Kraus block shape mismatch");
    if (!v.all_finite())
      throw InvalidState("channel: non-finite Kraus entries");
    sum += v.adjoint() * v;
  }
  sum -= Matrix::identity(dim_out_);
  if (sum.frobenius_norm() > unitality_tol)
    throw BrokenUnitality("channel: unitality violated (sum v^t v != identity)");
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel(dim, dim, {Matrix::identity(dim)});
}

KrausChannel KrausChannel::from_unitary(const Matrix& u) {
  if (!u.square()) throw DimensionMismatch("from_unitary: matrix not square");
  return KrausChannel(u.rows(), u.rows(), {u});
}

ChoiMatrix::ChoiMatrix(std::size_t dim_in, std::size_t dim_out, Matrix j,
                       double tol)
    : dim_in_(dim_in), dim_out_(dim_out), j_(std::move(j)) {
  const std::size_t n = dim_in_ * dim_out_;
  if (j_.rows() != n || j_.cols() != n)
    throw DimensionMismatch("choi: matrix size is not dim_in*dim_out");
  if (j_.hermiticity_defect() > tol)
    throw InvalidState("choi: matrix not Hermitian");
  const HermitianEig eig = hermitian_eig(hermitian_part(j_));
  if (eig.eigenvalues.front() < -tol)
    throw NotPsd("choi: matrix not positive semidefinite");
  Matrix defect = partial_trace(j_, dim_in_, dim_out_, 0) -
                  Matrix::identity(dim_out_);
  if (defect.frobenius_norm() > tol)
    throw BrokenUnitality("choi: partial trace over H is not the identity");
}

ChoiMatrix::ChoiMatrix(UncheckedTag, std::size_t dim_in, std::size_t dim_out,
                       Matrix j)
    : dim_in_(dim_in), dim_out_(dim_out), j_(std::move(j)) {}

ChoiMatrix ChoiMatrix::unchecked(std::size_t dim_in, std::size_t dim_out,
                                 Matrix j) {
  return ChoiMatrix(UncheckedTag{}, dim_in, dim_out, std::move(j));
}

Matrix heisenberg_apply(const KrausChannel& ch, const Matrix& x) {
  if (x.rows() != ch.dim_in() || x.cols() != ch.dim_in())
    throw DimensionMismatch("heisenberg_apply: observable dimension mismatch");
  Matrix out(ch.dim_out(), ch.dim_out());
  for (const Matrix& v : ch.kraus()) out += v.adjoint() * x * v;
  return out;
}

Matrix predual_apply_matrix(const KrausChannel& ch, const Matrix& tau) {
  if (tau.rows() != ch.dim_out() || tau.cols() != ch.dim_out())
    throw DimensionMismatch("predual_apply: state dimension mismatch");
  Matrix out(ch.dim_in(), ch.dim_in());
  for (const Matrix& v : ch.kraus()) out += v * tau * v.adjoint();
  return out;
}

DensityMatrix predual_apply(const KrausChannel& ch, const DensityMatrix& tau) {
  return DensityMatrix(hermitian_part(predual_apply_matrix(ch, tau.matrix())));
}

KrausChannel compose(const KrausChannel& ch12, const KrausChannel& ch23) {
  if (ch12.dim_out() != ch23.dim_in())
    throw DimensionMismatch("compose: intermediate space dimensions differ");
  std::vector<Matrix> blocks;
  blocks.reserve(ch12.kraus().size() * ch23.kraus().size());
  for (const Matrix& v : ch12.kraus())
    for (const Matrix& w : ch23.kraus()) blocks.push_back(v * w);
  return KrausChannel(ch12.dim_in(), ch23.dim_out(), std::move(blocks));
}

ChoiMatrix kraus_to_choi(const KrausChannel& ch) {
  const std::size_t din = ch.dim_in(), dout = ch.dim_out();
  const std::size_t n = din * dout;
  Matrix j(n, n);
  for (const Matrix& v : ch.kraus()) {
    // w_{(a,β)} = conj(v(a,β)); accumulate w w^†.
    std::vector<cxd> w(n);
    for (std::size_t a = 0; a < din; ++a)
      for (std::size_t b = 0; b < dout; ++b)
        w[a * dout + b] = std::conj(v(a, b));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        j(r, c) += w[r] * std::conj(w[c]);
  }
  return ChoiMatrix(din, dout, std::move(j));
}

KrausChannel choi_to_kraus(const ChoiMatrix& j, double rank_cutoff) {
  const std::size_t din = j.dim_in(), dout = j.dim_out();
  const HermitianEig eig = hermitian_eig(hermitian_part(j.matrix()));
  const double lmax = eig.eigenvalues.back();
  if (eig.eigenvalues.front() < -1e-8 * std::max(lmax, 1.0))
    throw NotPsd("choi_to_kraus: matrix indefinite beyond tolerance");

  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lam = eig.eigenvalues[k];
    if (!(lam > rank_cutoff * lmax)) continue;
    const double coeff = std::sqrt(lam);
    Matrix v(din, dout);
    for (std::size_t a = 0; a < din; ++a)
      for (std::size_t b = 0; b < dout; ++b)
        v(a, b) = std::conj(coeff * eig.eigenvectors(a * dout + b, k));
    blocks.push_back(std::move(v));
  }
  if (blocks.empty()) throw NotPsd("choi_to_kraus: no eigenvalue above cutoff");

  Matrix sum(dout, dout);
  for (const Matrix& v : blocks) sum += v.adjoint() * v;
  const double defect = (sum - Matrix::identity(dout)).frobenius_norm();
  if (defect > 1e-8)
    throw BrokenUnitality(
        "choi_to_kraus: recovered family violates unitality beyond 1e-8");
  if (defect > 1e-10) {
    // J from a numerical solve carries its residual into Σ v^†v; restore
    // exact unitality by the right factor (Σ v^†v)^{-1/2}.
    const Matrix correction = pinv_power(hermitian_part(sum), -0.5);
    for (Matrix& v : blocks) v = v * correction;
  }
  return KrausChannel(din, dout, std::move(blocks));
}

KrausChannel replacer_channel(const DensityMatrix& rho, std::size_t dim_out) {
  const std::size_t din = rho.dim();
  const HermitianEig eig = hermitian_eig(rho.matrix());
  const double lmax = eig.eigenvalues.back();

  std::vector<Matrix> blocks;
  for (std::size_t a = 0; a < eig.eigenvalues.size(); ++a) {
    const double lam = eig.eigenvalues[a];
    if (!(lam > kKernelCutoff * lmax)) continue;
    const double coeff = std::sqrt(lam);
    for (std::size_t b = 0; b < dim_out; ++b) {
      Matrix v(din, dim_out);
      for (std::size_t r = 0; r < din; ++r)
        v(r, b) = coeff * eig.eigenvectors(r, a);
      blocks.push_back(std::move(v));
    }
  }
  return KrausChannel(din, dim_out, std::move(blocks));
}

double marginal_gap(const KrausChannel& ch, const DensityMatrix& rho,
                    const DensityMatrix& sigma) {
  if (rho.dim() != ch.dim_in() || sigma.dim() != ch.dim_out())
    throw DimensionMismatch("marginal_gap: state dimensions mismatch channel");
  const Matrix diff = predual_apply_matrix(ch, sigma.matrix()) - rho.matrix();
  return schatten_norm(diff, 1);
}

}  // namespace qot

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

#include "qot/generators.hpp"

#include <cmath>
#include <vector>

#include "qot/eig.hpp"
#include "qot/errors.hpp"

namespace qot {

DensityMatrix random_state(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim)
    throw InvalidRank("random_state: rank must lie in [1, dim]");
  const Matrix g = rng.ginibre(dim, rank);
  Matrix m = g * g.adjoint();
  const double tr = m.trace().real();
  if (!(tr > 0.0)) throw NumericalFailure("random_state: zero-trace draw");
  m *= cxd{1.0 / tr, 0.0};
  return DensityMatrix(hermitian_part(m));
}

DensityMatrix random_state(std::size_t dim, std::size_t rank,
                           std::uint64_t seed) {
  Rng rng(seed);
  return random_state(dim, rank, rng);
}

KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                            std::size_t num_kraus, Rng& rng) {
  if (num_kraus < 1) throw InvalidRank("random_channel: num_kraus must be >= 1");
  if (dim_in * num_kraus < dim_out)
    throw InvalidRank("random_channel: dim_in*num_kraus < dim_out has no isometry");

  const std::size_t rows = dim_in * num_kraus;
  Matrix g = rng.ginibre(rows, dim_out);

  // Modified Gram-Schmidt, two passes per column.
  for (std::size_t c = 0; c < dim_out; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        cxd proj = 0.0;
        for (std::size_t r = 0; r < rows; ++r)
          proj += std::conj(g(r, p)) * g(r, c);
        for (std::size_t r = 0; r < rows; ++r) g(r, c) -= proj * g(r, p);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    if (!(norm > 1e-12))
      throw NumericalFailure("random_channel: degenerate Gaussian draw");
    for (std::size_t r = 0; r < rows; ++r) g(r, c) /= norm;
  }

  std::vector<Matrix> blocks(num_kraus, Matrix(dim_in, dim_out));
  for (std::size_t j = 0; j < num_kraus; ++j)
    for (std::size_t r = 0; r < dim_in; ++r)
      for (std::size_t c = 0; c < dim_out; ++c)
        blocks[j](r, c) = g(j * dim_in + r, c);
  return KrausChannel(dim_in, dim_out, std::move(blocks));
}

KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                            std::size_t num_kraus, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim_in, dim_out, num_kraus, rng);
}

Matrix random_observable(std::size_t dim, Rng& rng) {
  return rng.hermitian(dim);
}

Matrix random_observable(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_observable(dim, rng);
}

ObservableTuple random_observable_tuple(std::size_t dim, std::size_t d,
                                        Rng& rng) {
  std::vector<Matrix> xs;
  xs.reserve(d);
  for (std::size_t k = 0; k < d; ++k) xs.push_back(random_observable(dim, rng));
  return ObservableTuple(dim, std::move(xs));
}

KrausChannel pure_transport_channel(const DensityMatrix& rho_target,
                                    const DensityMatrix& sigma_source) {
  if (rho_target.dim() != sigma_source.dim())
    throw DimensionMismatch("pure_transport_channel: dimensions differ");
  const std::size_t n = rho_target.dim();

  const HermitianEig er = hermitian_eig(rho_target.matrix());
  const HermitianEig es = hermitian_eig(sigma_source.matrix());
  if (er.eigenvalues[n - 1] < 1.0 - 1e-9 || es.eigenvalues[n - 1] < 1.0 - 1e-9)
    throw InvalidState("pure_transport_channel: states must be pure");

  std::vector<cxd> phi(n), psi(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = er.eigenvectors(i, n - 1);
    psi[i] = es.eigenvectors(i, n - 1);
  }

  // Rotate psi so its overlap with phi is real nonnegative.
  cxd c = 0.0;
  for (std::size_t i = 0; i < n; ++i) c += std::conj(phi[i]) * psi[i];
  const double ac = std::abs(c);
  const cxd phase = ac > 0.0 ? std::conj(c) / ac : cxd{1.0, 0.0};
  for (auto& v : psi) v *= phase;

  // Reflection along psi−phi maps psi to phi; along psi+phi it maps psi to
  // −phi. Pick the better-conditioned mirror and fix the sign.
  const bool use_sum = ac > 0.5;
  std::vector<cxd> w(n);
  double wn2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = use_sum ? psi[i] + phi[i] : psi[i] - phi[i];
    wn2 += std::norm(w[i]);
  }
  Matrix u = Matrix::identity(n);
  if (wn2 > 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        u(i, j) -= 2.0 * w[i] * std::conj(w[j]) / wn2;
  }
  if (use_sum) u *= cxd{-1.0, 0.0};
  u *= phase;
  return KrausChannel::from_unitary(u);
}

}  // namespace qot

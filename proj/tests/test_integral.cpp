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

#include <cmath>
#include <algorithm>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "qot/errors.hpp"
#include "qot/generators.hpp"
#include "qot/integral.hpp"
#include "qot/linalg.hpp"

using namespace qot;

namespace {

// Independent oracle: adaptive Simpson integration, implementation-free of
// the Gauss-Legendre machinery under test.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  const double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

double sech_weight(double t) {
  return 2.0 / std::cosh(2.0 * std::numbers::pi * t);
}

struct Instance {
  KrausChannel ch;
  DensityMatrix rho;
  DensityMatrix sigma;
};

Instance marginal_pair(std::size_t din, std::size_t dout, std::size_t nk,
                       std::size_t rank_sigma, Rng& rng) {
  KrausChannel ch = random_channel(din, dout, nk, rng);
  DensityMatrix sigma = random_state(dout, rank_sigma, rng);
  DensityMatrix rho = predual_apply(ch, sigma);
  return {std::move(ch), std::move(rho), std::move(sigma)};
}

}  // namespace

TEST_CASE("l_apply is an isometry") {
  const KrausChannel id2 = KrausChannel::identity(2);
  const Matrix y = pauli_x();
  const OperatorTuple single = l_apply(id2, y);
  CHECK(single.blocks.size() == 1);
  CHECK((single.blocks[0] - y).frobenius_norm() < 1e-15);

  CHECK(l_apply(id2, Matrix(2, 2)).norm() == 0.0);

  for (std::uint64_t seed : {301u, 302u, 303u}) {
    Rng rng(seed);
    const KrausChannel ch = random_channel(3, 2, 3, rng);
    const Matrix el = rng.ginibre(2, 2);
    CHECK(std::abs(l_apply(ch, el).norm() - el.frobenius_norm()) <= 1e-12);
  }
}

TEST_CASE("r_apply: defining clauses and partial isometry") {
  Rng rng(311);
  const DensityMatrix rho = random_state(2, 2, rng);
  const KrausChannel id2 = KrausChannel::identity(2);
  const Matrix x = random_observable(2, rng);
  const Matrix rho_half = matrix_power(rho.matrix(), cxd{0.5, 0.0});

  // Identity channel, full-rank ρ = σ: R(xρ^{1/2}) = (xσ^{1/2}).
  const OperatorTuple out = r_apply(id2, rho, rho, x * rho_half);
  CHECK(out.blocks.size() == 1);
  CHECK((out.blocks[0] - x * rho_half).frobenius_norm() < 1e-10);

  for (std::uint64_t seed : {312u, 313u, 314u}) {
    Rng r2(seed);
    const Instance inst = marginal_pair(4, 3, 1, 2, r2);  // rank-deficient ρ
    const Matrix p = support_projection(inst.rho.matrix());

    // Vanishes on elements annihilated by P_ρ from the right.
    const Matrix q = Matrix::identity(4) - p;
    const Matrix dead = r2.ginibre(4, 4) * q;
    CHECK(r_apply(inst.ch, inst.rho, inst.sigma, dead).norm() < 1e-10);

    // Partial isometry: ‖R(A)‖₂ = ‖A·P_ρ‖₂ for arbitrary A.
    const Matrix a = r2.ginibre(4, 4);
    const double lhs = r_apply(inst.ch, inst.rho, inst.sigma, a).norm();
    const double rhs = (a * p).frobenius_norm();
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + rhs));
  }
}

TEST_CASE("lstar_apply: adjoint and intertwining identities") {
  for (std::uint64_t seed : {321u, 322u, 323u}) {
    Rng rng(seed);
    const KrausChannel ch = random_channel(3, 2, 2, rng);

    // L*L = identity.
    const Matrix y = rng.ginibre(2, 2);
    CHECK((lstar_apply(ch, l_apply(ch, y)) - y).frobenius_norm() < 1e-13);

    // Adjoint pairing ⟨L(y), z⟩ = ⟨y, L*(z)⟩.
    OperatorTuple zs;
    for (std::size_t j = 0; j < ch.kraus().size(); ++j)
      zs.blocks.push_back(rng.ginibre(3, 2));
    cxd pair_left = 0.0;
    const OperatorTuple ly = l_apply(ch, y);
    for (std::size_t j = 0; j < zs.blocks.size(); ++j)
      pair_left += hs_inner(ly.blocks[j], zs.blocks[j]);
    const cxd pair_right = hs_inner(y, lstar_apply(ch, zs));
    CHECK(std::abs(pair_left - pair_right) < 1e-12);

    // L*R(xρ^{1/2}) = Φ(x)σ^{1/2}.
    const DensityMatrix sigma = random_state(2, 2, rng);
    const DensityMatrix rho = predual_apply(ch, sigma);
    const Matrix x = random_observable(3, rng);
    const Matrix rho_half = matrix_power(rho.matrix(), cxd{0.5, 0.0});
    const Matrix sig_half = matrix_power(sigma.matrix(), cxd{0.5, 0.0});
    const Matrix lhs =
        lstar_apply(ch, r_apply(ch, rho, sigma, x * rho_half));
    const Matrix rhs = heisenberg_apply(ch, x) * sig_half;
    CHECK((lhs - rhs).frobenius_norm() <= 1e-10);
  }

  // Zero tuple maps to zero.
  const KrausChannel id2 = KrausChannel::identity(2);
  OperatorTuple zero;
  zero.blocks.push_back(Matrix(2, 2));
  CHECK(lstar_apply(id2, zero).frobenius_norm() == 0.0);
}

TEST_CASE("quadrature: probability mass, symmetry, moments") {
  const QuadratureRule rule = build_quadrature();
  CHECK(rule.nodes.size() == 64 * 8);
  CHECK(std::abs(rule.weight_sum() - 1.0) < 1e-9);

  // Exact mirror symmetry by construction.
  const std::size_t n = rule.nodes.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    CHECK(rule.nodes[i] == -rule.nodes[n - 1 - i]);
    CHECK(rule.weights[i] == rule.weights[n - 1 - i]);
  }

  // ∫ t dμ = 0 (odd integrand).
  double first_moment = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    first_moment += rule.weights[i] * rule.nodes[i];
  CHECK(std::abs(first_moment) < 1e-10);

  CHECK(rule.tail_bound == doctest::Approx((2.0 / std::numbers::pi) *
                                           std::exp(-8.0 * std::numbers::pi)));

  CHECK_THROWS_AS(build_quadrature(-1.0, 64, 8), InvalidParameters);
  CHECK_THROWS_AS(build_quadrature(4.0, 0, 8), InvalidParameters);
  CHECK_THROWS_AS(build_quadrature(4.0, 64, 1), InvalidParameters);
}

TEST_CASE("quadrature: cosine family against closed form and adaptive oracle") {
  const QuadratureRule rule = build_quadrature();
  for (double a : {0.1, 1.0, 3.0}) {
    double by_rule = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      by_rule += rule.weights[i] * std::cos(a * rule.nodes[i]);

    const double closed_form = 1.0 / std::cosh(0.25 * a);
    const double by_oracle = integrate(
        [a](double t) { return sech_weight(t) * std::cos(a * t); }, -10.0,
        10.0, 1e-13);

    CHECK(std::abs(by_oracle - closed_form) < 1e-10);
    CHECK(std::abs(by_rule - closed_form) < 1e-8);
    CHECK(std::abs(by_rule - by_oracle) < 1e-8);
  }

  // Odd panel counts keep symmetry and mass.
  const QuadratureRule odd = build_quadrature(4.0, 33, 7);
  CHECK(std::abs(odd.weight_sum() - 1.0) < 1e-9);
  const std::size_t n = odd.nodes.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    CHECK(odd.nodes[i] == -odd.nodes[n - 1 - i]);
}

TEST_CASE("residue self-check reproduces f(0) = 1 for f = exp(az)") {
  const QuadratureRule rule = build_quadrature();
  CHECK(residue_selfcheck(0.0, rule).gap <= 1e-9);
  CHECK(residue_selfcheck(1.0, rule).gap <= 1e-8);
  CHECK(residue_selfcheck(3.0, rule).gap <= 1e-7);
  CHECK(residue_selfcheck(-3.0, rule).gap <= 1e-7);
}

TEST_CASE("integrand: self instance vanishes, generic values bounded") {
  Rng rng(331);
  const DensityMatrix rho = random_state(3, 3, rng);
  const Matrix x = random_observable(3, rng);
  const KrausChannel id3 = KrausChannel::identity(3);
  for (double t : {-1.5, 0.0, 0.3, 2.0})
    CHECK(integrand(t, id3, rho, rho, x, x) < 1e-20);

  // Triangle-inequality bound through the KMS norms.
  const Instance inst = marginal_pair(3, 2, 2, 2, rng);
  const Matrix xo = random_observable(3, rng);
  const Matrix yo = random_observable(2, rng);
  const double bx = std::sqrt(kms_inner(xo, xo, inst.rho));
  const double by = std::sqrt(kms_inner(yo, yo, inst.sigma));
  const double bound = (bx + by) * (bx + by) + 1e-8;
  for (double t : {-2.0, -0.4, 0.0, 0.7, 1.9}) {
    const double v = integrand(t, inst.ch, inst.rho, inst.sigma, xo, yo);
    CHECK(v >= 0.0);
    CHECK(v <= bound);
  }
}

TEST_CASE("integral representation: anchors") {
  const QuadratureRule rule = build_quadrature();

  Rng rng(341);
  const DensityMatrix rho = random_state(3, 3, rng);
  const ObservableTuple xs = random_observable_tuple(3, 2, rng);
  const IntegralRepReport self = verify_integral_rep(
      KrausChannel::identity(3), rho, rho, xs, xs, rule);
  CHECK(self.lhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(self.rhs <= 1e-18);

  // Replacer on (I/2, I/2) with Z: cost 2, reproduced by quadrature.
  const DensityMatrix mixed = maximally_mixed(2);
  const ObservableTuple zs(2, {pauli_z()});
  const IntegralRepReport rep = verify_integral_rep(
      replacer_channel(mixed, 2), mixed, mixed, zs, zs, rule);
  CHECK(rep.lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.gap <= 1e-8);
  CHECK(std::abs(rep.rhs - rep.rhs_embedded) <= 1e-10);
}

TEST_CASE("integral representation: seeded sweep incl. rank deficiency") {
  const QuadratureRule rule = build_quadrature();
  for (std::uint64_t seed = 350; seed < 380; ++seed) {
    Rng rng(seed);
    const std::size_t din = 2 + seed % 3;   // 2..4
    const std::size_t dout = 2 + seed % 2;  // 2..3
    const std::size_t nk = 1 + seed % 2;
    const std::size_t rank = 1 + seed % dout;
    const Instance inst = marginal_pair(din, dout, nk, rank, rng);
    const std::size_t d = 1 + seed % 3;
    const ObservableTuple xs = random_observable_tuple(din, d, rng);
    const ObservableTuple ys = random_observable_tuple(dout, d, rng);

    const IntegralRepReport rep =
        verify_integral_rep(inst.ch, inst.rho, inst.sigma, xs, ys, rule);
    CHECK(rep.gap <= 1e-6 * (1.0 + rep.lhs));
    CHECK(std::abs(rep.rhs - rep.rhs_embedded) <= 1e-10 * (1.0 + rep.rhs));
  }
}

TEST_CASE("subadditivity of the cost along chains") {
  // Identity chain: everything zero.
  Rng rng(361);
  const DensityMatrix rho = random_state(2, 2, rng);
  const ObservableTuple xs = random_observable_tuple(2, 2, rng);
  const KrausChannel id2 = KrausChannel::identity(2);
  const SubadditivityReport zero =
      verify_subadditivity(id2, id2, rho, rho, rho, xs, xs, xs);
  CHECK(std::abs(zero.c12) < 1e-12);
  CHECK(std::abs(zero.slack) < 1e-9);

  // Neutral second leg: c13 = c12, slack 0.
  for (std::uint64_t seed : {362u, 363u}) {
    Rng r2(seed);
    KrausChannel ch12 = random_channel(3, 2, 2, r2);
    const DensityMatrix rho2 = random_state(2, 2, r2);
    const DensityMatrix rho1 = predual_apply(ch12, rho2);
    const ObservableTuple x1 = random_observable_tuple(3, 2, r2);
    const ObservableTuple x2 = random_observable_tuple(2, 2, r2);
    const SubadditivityReport rep = verify_subadditivity(
        ch12, KrausChannel::identity(2), rho1, rho2, rho2, x1, x2, x2);
    CHECK(rep.c13 == doctest::Approx(rep.c12).epsilon(1e-10));
    CHECK(std::abs(rep.slack) < 1e-8);
  }

  // Seeded chains: slack ≥ −1e-8 always.
  for (std::uint64_t seed = 370; seed < 400; ++seed) {
    Rng r3(seed);
    const std::size_t d1 = 2 + seed % 2, d2 = 2 + (seed / 2) % 2, d3 = 2;
    KrausChannel ch23 = random_channel(d2, d3, 1 + seed % 2, r3);
    const DensityMatrix rho3 = random_state(d3, 1 + seed % d3, r3);
    const DensityMatrix rho2 = predual_apply(ch23, rho3);
    const std::size_t nk12 = std::max<std::size_t>(1 + seed % 3, (d2 + d1 - 1) / d1);
    KrausChannel ch12 = random_channel(d1, d2, nk12, r3);
    const DensityMatrix rho1 = predual_apply(ch12, rho2);
    const std::size_t d = 1 + seed % 2;
    const SubadditivityReport rep = verify_subadditivity(
        ch12, ch23, rho1, rho2, rho3, random_observable_tuple(d1, d, r3),
        random_observable_tuple(d2, d, r3), random_observable_tuple(d3, d, r3));
    CHECK(rep.slack >= -1e-8);
  }
}

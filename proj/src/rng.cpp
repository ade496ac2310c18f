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

#include "qot/rng.hpp"

#include <cmath>
#include <numbers>

namespace qot {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

std::uint64_t Rng::derive_stream(std::uint64_t master_seed,
                                 std::uint64_t stream_id) {
  std::uint64_t s = master_seed;
  splitmix64(s);
  splitmix64(s);
  s ^= (stream_id + 1) * 0x9E3779B97F4A7C15ULL;
  return splitmix64(s);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

cxd Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cxd{re, im};
}

Matrix Rng::ginibre(std::size_t rows, std::size_t cols) {
  Matrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = complex_normal();
  return g;
}

Matrix Rng::hermitian(std::size_t dim) {
  const Matrix g = ginibre(dim, dim);
  return hermitian_part(g);
}

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(next_u64()) * span;
  return lo + static_cast<std::uint64_t>(wide >> 64);
}

}  // namespace qot

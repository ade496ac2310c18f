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

#include <cstdint>
#include <random>

#include "qot/matrix.hpp"

namespace qot {

// Deterministic random source: a Mersenne Twister (mt19937_64, fully
// specified by the standard) seeded through SplitMix64, with hand-rolled
// uniform and Box-Muller transforms so every drawn double is reproducible
// bit-for-bit across runs and platforms.
//
// Parallel sweeps never share an Rng: each sample derives its own stream
// from (master_seed, stream_id) via Rng::stream, so results do not depend
// on the degree of parallelism.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // SplitMix64-based mix of (master_seed, stream_id); documented layout:
  // two SplitMix64 steps over master_seed, xor with the golden-ratio
  // multiple of (stream_id + 1), one more SplitMix64 step.
  static std::uint64_t derive_stream(std::uint64_t master_seed,
                                     std::uint64_t stream_id);
  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    return Rng(derive_stream(master_seed, stream_id));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1): top 53 bits of the raw output.
  double uniform();

  // Standard normal via Box-Muller; pairs are cached.
  double normal();

  // Entry of the Ginibre ensemble: real and imaginary parts i.i.d. N(0,1).
  cxd complex_normal();

  // rows×cols matrix of complex normals, filled row-major.
  Matrix ginibre(std::size_t rows, std::size_t cols);

  // (G + G^†)/2 for a Ginibre draw G.
  Matrix hermitian(std::size_t dim);

  // Uniform integer in [lo, hi] by rejection-free 128-bit scaling.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace qot

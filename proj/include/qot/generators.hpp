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

#include "qot/channel.hpp"
#include "qot/rng.hpp"
#include "qot/states.hpp"

namespace qot {

// Ginibre state: G G^† / tr(G G^†) for a dim×rank complex Gaussian G.
DensityMatrix random_state(std::size_t dim, std::size_t rank, Rng& rng);
DensityMatrix random_state(std::size_t dim, std::size_t rank, std::uint64_t seed);

// Isometry slicing: draw a (dim_in·num_kraus)×dim_out Gaussian matrix,
// orthonormalize its columns, slice its rows into num_kraus blocks. The
// stacked blocks form an isometry, so Σ v^†v = I up to roundoff only.
// Requires dim_in·num_kraus ≥ dim_out.
KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                            std::size_t num_kraus, Rng& rng);
KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                            std::size_t num_kraus, std::uint64_t seed);

// Hermitian part of a Ginibre draw.
Matrix random_observable(std::size_t dim, Rng& rng);
Matrix random_observable(std::size_t dim, std::uint64_t seed);

// d-tuple of random observables drawn consecutively from one stream.
ObservableTuple random_observable_tuple(std::size_t dim, std::size_t d, Rng& rng);

// Random pure state density matrix (rank 1), plus the unitary channel that
// transports one pure state onto another: a Householder-style reflection
// composed with a phase so that u ψ = φ. Used as an alternative feasible
// point for pure-pure transport instances.
KrausChannel pure_transport_channel(const DensityMatrix& rho_target,
                                    const DensityMatrix& sigma_source);

}  // namespace qot

// Copyright 2026 The ameqbc Authors
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
#include <vector>

#include "ameqbc/state.hpp"

namespace ameqbc {

using Rng = std::mt19937_64;

/// Independent stream seed for (seed, stream) via splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix, R phases fixed).
Operator haar_unitary(Index n, Rng& rng);
/// First `cols` columns of a Haar unitary on `rows`: a Haar isometry.
Operator haar_isometry(Index rows, Index cols, Rng& rng);

StateVector random_state(const RegisterShape& shape, Rng& rng);
/// G G^dagger / Tr for a Ginibre G of size dim x rank (rank 0 means full).
DensityMatrix random_density_matrix(const RegisterShape& shape, Rng& rng, Index rank = 0);
/// Uniform point on the probability simplex.
std::vector<double> dirichlet_uniform(std::size_t n, Rng& rng);

}  // namespace ameqbc

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

#include <vector>

#include "ameqbc/state.hpp"

namespace ameqbc {

/// psi = sum_i sqrt(lambda_i) |left_i>|right_i> across a bipartition.
///
/// Coefficients are nonincreasing and sum to one. The first entry of each
/// left vector whose magnitude exceeds 1e-12 is real and nonnegative. Within
/// a degenerate block of coefficients the vectors are any orthonormal basis
/// of the block, so only the block projectors are well defined.
struct SchmidtData {
  std::vector<double> coefficients;
  std::vector<StateVector> left_vectors;   ///< on cut.side_one()
  std::vector<StateVector> right_vectors;  ///< on cut.side_two()
  double lambda_max = 0.0;

  std::size_t rank(double tol = tol::kStructural) const;
  /// Sum_i sqrt(lambda_i)|left_i>|right_i> in (side one, side two) order.
  Amplitudes reconstruct_cut_order() const;
};

/// Schmidt decomposition by SVD of the amplitude matrix reshaped along `cut`.
SchmidtData schmidt_decompose(const StateVector& psi, const Bipartition& cut);

/// Gram matrix G_ij = <v_i|v_j>.
Operator gram_matrix(const std::vector<StateVector>& family);

}  // namespace ameqbc

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

#include "ameqbc/schmidt.hpp"

#include <Eigen/SVD>

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace ameqbc {

std::size_t SchmidtData::rank(double tol) const {
  return static_cast<std::size_t>(
      std::count_if(coefficients.begin(), coefficients.end(), [tol](double l) { return l > tol; }));
}

Amplitudes SchmidtData::reconstruct_cut_order() const {
  if (left_vectors.empty()) return {};
  const Index n1 = left_vectors.front().amplitudes().size();
  const Index n2 = right_vectors.front().amplitudes().size();
  Amplitudes out = Amplitudes::Zero(n1 * n2);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    out += std::sqrt(coefficients[i]) *
           Eigen::kroneckerProduct(left_vectors[i].amplitudes(), right_vectors[i].amplitudes())
               .eval();
  }
  return out;
}

SchmidtData schmidt_decompose(const StateVector& psi, const Bipartition& cut) {
  if (!(psi.shape() == cut.shape())) throw QbcError("schmidt_decompose: cut/state mismatch");
  const Amplitudes moved = permute_factors(psi.shape(), psi.amplitudes(), cut.to_cut_order());
  const Index n1 = cut.dim_one();
  const Index n2 = cut.dim_two();
  // moved[i1 * n2 + i2]: column-major (n2, n1) map, transposed to (n1, n2).
  const Operator m = Eigen::Map<const Operator>(moved.data(), n2, n1).transpose();
  Eigen::JacobiSVD<Operator> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

  const RegisterShape left_shape = cut.shape().subshape(cut.side_one());
  const RegisterShape right_shape = cut.shape().subshape(cut.side_two());
  SchmidtData out;
  const Index terms = svd.singularValues().size();
  double total = 0.0;
  for (Index k = 0; k < terms; ++k) total += svd.singularValues()(k) * svd.singularValues()(k);
  for (Index k = 0; k < terms; ++k) {
    const double s = svd.singularValues()(k);
    Amplitudes u = svd.matrixU().col(k);
    Amplitudes v = svd.matrixV().col(k).conjugate();
    for (Index i = 0; i < u.size(); ++i) {
      if (std::abs(u(i)) > 1e-12) {
        const Complex phase = std::conj(u(i)) / std::abs(u(i));
        u *= phase;
        v /= phase;
        break;
      }
    }
    out.coefficients.push_back(s * s / total);
    out.left_vectors.push_back(StateVector::normalized(left_shape, std::move(u)));
    out.right_vectors.push_back(StateVector::normalized(right_shape, std::move(v)));
  }
  out.lambda_max = out.coefficients.empty() ? 0.0 : out.coefficients.front();
  return out;
}

Operator gram_matrix(const std::vector<StateVector>& family) {
  const Index n = static_cast<Index>(family.size());
  Operator g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      g(i, j) = family[static_cast<std::size_t>(i)].inner(family[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

}  // namespace ameqbc

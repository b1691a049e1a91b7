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

#include "ameqbc/random.hpp"

#include <cmath>

namespace ameqbc {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

Operator ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Operator z(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      z(i, j) = Complex(re, im);
    }
  }
  return z;
}

}  // namespace

Operator haar_unitary(Index n, Rng& rng) {
  const Operator z = ginibre(n, n, rng);
  Eigen::HouseholderQR<Operator> qr(z);
  Operator q = qr.householderQ();
  for (Index j = 0; j < n; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(j) *= r / mag;
  }
  return q;
}

Operator haar_isometry(Index rows, Index cols, Rng& rng) {
  if (cols > rows) throw QbcError("haar_isometry: more columns than rows");
  return haar_unitary(rows, rng).leftCols(cols);
}

StateVector random_state(const RegisterShape& shape, Rng& rng) {
  Amplitudes v = ginibre(shape.total_dim(), 1, rng).col(0);
  return StateVector::normalized(shape, std::move(v));
}

DensityMatrix random_density_matrix(const RegisterShape& shape, Rng& rng, Index rank) {
  const Index dim = shape.total_dim();
  const Index r = (rank <= 0 || rank > dim) ? dim : rank;
  const Operator g = ginibre(dim, r, rng);
  Operator rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(shape, std::move(rho));
}

std::vector<double> dirichlet_uniform(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - u(rng));
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace ameqbc

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

#include "ameqbc/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ameqbc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw QbcError("Permutation: empty domain");
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) {
      throw QbcError("Permutation: not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::random(int d, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 0);
  // Explicit Fisher-Yates: std::shuffle's draw pattern is library specific.
  for (int i = d - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int Permutation::operator()(int k) const {
  if (k < 0 || k >= size()) throw QbcError("Permutation: index out of range");
  return images_[static_cast<std::size_t>(k)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 0; k < size(); ++k) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(k)])] = k;
  return Permutation(std::move(inv));
}

Complex root_of_unity(int d, long long k) {
  long long r = k % d;
  if (r < 0) r += d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

Operator fourier_gate(int d) {
  if (d < 2) throw QbcError("fourier_gate: d must be >= 2");
  Operator f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) f(k, l) = norm * root_of_unity(d, static_cast<long long>(k) * l);
  }
  return f;
}

StateVector basis_vector(BasisKind kind, int k, int d, const std::optional<Permutation>& pi) {
  if (d < 2) throw QbcError("basis_vector: d must be >= 2");
  if (k < 0 || k >= d) throw QbcError("basis_vector: index out of range");
  if (pi && pi->size() != d) throw QbcError("basis_vector: permutation size mismatch");
  const int label = pi ? (*pi)(k) : k;
  RegisterShape shape({d});
  if (kind == BasisKind::Z) return StateVector::basis(shape, label);
  Amplitudes v(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int l = 0; l < d; ++l) v(l) = norm * root_of_unity(d, -static_cast<long long>(label) * l);
  return StateVector(shape, std::move(v));
}

}  // namespace ameqbc

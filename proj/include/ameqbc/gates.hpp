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

#include <optional>
#include <random>
#include <vector>

#include "ameqbc/state.hpp"

namespace ameqbc {

/// Bijection on {0..d-1} stored as a lookup table.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int d);
  static Permutation random(int d, std::mt19937_64& rng);
  /// All d! permutations in lexicographic order.
  static std::vector<Permutation> all(int d);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const;
  Permutation inverse() const;
  const std::vector<int>& images() const { return images_; }
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// exp(2 pi i k / d), reducing k mod d first.
Complex root_of_unity(int d, long long k);

/// F = d^{-1/2} sum_{k,l} w^{kl} |k><l|.
Operator fourier_gate(int d);

enum class BasisKind { Z, X };

/// |pi(k)> for Z, or |~pi(k)> = F^dagger |pi(k)> for X.
StateVector basis_vector(BasisKind kind, int k, int d,
                         const std::optional<Permutation>& pi = std::nullopt);

}  // namespace ameqbc

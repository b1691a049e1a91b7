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

#include <span>
#include <vector>

#include "ameqbc/common.hpp"

namespace ameqbc {

/// Ordered list of local dimensions. Basis index of |i_1 ... i_n> is
/// sum_k i_k * stride(k), with the leftmost factor most significant.
class RegisterShape {
 public:
  explicit RegisterShape(std::vector<int> factor_dims);

  static RegisterShape uniform(int d, int count);

  const std::vector<int>& factor_dims() const { return dims_; }
  int num_factors() const { return static_cast<int>(dims_.size()); }
  int dim(int factor) const { return dims_.at(static_cast<std::size_t>(factor)); }
  Index total_dim() const { return total_; }
  Index stride(int factor) const { return strides_.at(static_cast<std::size_t>(factor)); }

  /// Shape of the listed factors, in the listed order.
  RegisterShape subshape(std::span<const int> factors) const;
  RegisterShape concat(const RegisterShape& tail) const;

  bool operator==(const RegisterShape& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<Index> strides_;
  Index total_ = 1;
};

/// A reordering of register factors. `target(j)` is the position that old
/// factor j occupies after the reordering.
class FactorPermutation {
 public:
  explicit FactorPermutation(std::vector<int> targets);

  /// Permutation that places old factors in the sequence given by `order`
  /// (order[k] = old factor that ends up at position k).
  static FactorPermutation from_order(std::vector<int> order);
  static FactorPermutation identity(int n);

  int size() const { return static_cast<int>(targets_.size()); }
  int target(int j) const { return targets_.at(static_cast<std::size_t>(j)); }
  const std::vector<int>& targets() const { return targets_; }
  /// order()[k] = old factor at new position k.
  std::vector<int> order() const;
  FactorPermutation inverse() const;

 private:
  std::vector<int> targets_;
};

RegisterShape permuted_shape(const RegisterShape& shape, const FactorPermutation& perm);

/// For each new basis index n, the old basis index that moves there.
std::vector<Index> permutation_source_indices(const RegisterShape& shape,
                                              const FactorPermutation& perm);

/// Vector with factors reordered by `perm`; result lives on permuted_shape.
Amplitudes permute_factors(const RegisterShape& shape, const Amplitudes& amps,
                           const FactorPermutation& perm);

/// rho -> P rho P^dagger without materializing P.
Operator permute_factors(const RegisterShape& shape, const Operator& op,
                         const FactorPermutation& perm);

/// Unitary P with P|i_1..i_n> = |i_{perm^-1(1)} .. i_{perm^-1(n)}>.
Operator factor_permutation_operator(const RegisterShape& shape,
                                     const FactorPermutation& perm);

/// Split of a register into two complementary, nonempty factor sets, ordered
/// so that side two carries the smaller dimension (N2 <= N1).
class Bipartition {
 public:
  Bipartition(const RegisterShape& shape, std::vector<int> side);

  const RegisterShape& shape() const { return shape_; }
  const std::vector<int>& side_one() const { return one_; }
  const std::vector<int>& side_two() const { return two_; }
  Index dim_one() const { return n1_; }
  Index dim_two() const { return n2_; }
  /// Reordering that puts side one first, then side two.
  FactorPermutation to_cut_order() const;
  std::string label() const;

 private:
  RegisterShape shape_;
  std::vector<int> one_;
  std::vector<int> two_;
  Index n1_ = 0;
  Index n2_ = 0;
};

/// The cuts {k} | rest for k = 0..n-1 of an n-factor register.
std::vector<Bipartition> single_factor_cuts(const RegisterShape& shape);

}  // namespace ameqbc

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

#include <catch_amalgamated.hpp>

#include "ameqbc/register.hpp"
#include "ameqbc/random.hpp"

using namespace ameqbc;

TEST_CASE("register shape strides are row-major, leftmost most significant") {
  const RegisterShape s({2, 3, 4});
  CHECK(s.total_dim() == 24);
  CHECK(s.stride(0) == 12);
  CHECK(s.stride(1) == 4);
  CHECK(s.stride(2) == 1);
  const std::vector<int> pick{2, 0};
  CHECK(s.subshape(pick) == RegisterShape({4, 2}));
  CHECK(s.concat(RegisterShape({5})) == RegisterShape({2, 3, 4, 5}));
  CHECK(RegisterShape::uniform(3, 2) == RegisterShape({3, 3}));
}

TEST_CASE("register shape rejects bad dimensions") {
  CHECK_THROWS_AS(RegisterShape(std::vector<int>{}), QbcError);
  CHECK_THROWS_AS(RegisterShape({2, 1}), QbcError);
  CHECK_THROWS_AS(RegisterShape({0}), QbcError);
}

TEST_CASE("factor permutations validate and invert") {
  CHECK_THROWS_AS(FactorPermutation({0, 0}), QbcError);
  CHECK_THROWS_AS(FactorPermutation({0, 2}), QbcError);
  const auto p = FactorPermutation::from_order({2, 0, 1});
  CHECK(p.order() == std::vector<int>{2, 0, 1});
  CHECK(p.target(2) == 0);
  const auto q = p.inverse();
  for (int j = 0; j < 3; ++j) CHECK(q.target(p.target(j)) == j);
}

TEST_CASE("identity factor permutation is the identity operator") {
  const RegisterShape s({2, 3});
  const Operator p = factor_permutation_operator(s, FactorPermutation::identity(2));
  CHECK(max_abs_diff(p, Operator::Identity(6, 6)) == 0.0);
}

TEST_CASE("swap of two qubits maps |01> to |10>") {
  const RegisterShape s({2, 2});
  const Operator p = factor_permutation_operator(s, FactorPermutation({1, 0}));
  Amplitudes in = Amplitudes::Zero(4);
  in(1) = 1.0;
  const Amplitudes out = p * in;
  CHECK(std::abs(out(2) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(out(1)) < 1e-15);
}

TEST_CASE("factor permutation with wrong size is rejected") {
  const RegisterShape s({2, 2, 2});
  CHECK_THROWS_AS(factor_permutation_operator(s, FactorPermutation({1, 0})), QbcError);
}

TEST_CASE("permute then inverse permute round-trips random states") {
  Rng rng(11);
  const RegisterShape s({2, 3, 4, 2});
  const auto perm = FactorPermutation::from_order({3, 1, 0, 2});
  for (int t = 0; t < 20; ++t) {
    const StateVector psi = random_state(s, rng);
    const Amplitudes moved = permute_factors(s, psi.amplitudes(), perm);
    const Amplitudes back = permute_factors(permuted_shape(s, perm), moved, perm.inverse());
    CHECK((back - psi.amplitudes()).norm() <= 1e-12);
  }
}

TEST_CASE("permute_factors on operators equals conjugation by the permutation unitary") {
  Rng rng(3);
  const RegisterShape s({2, 3, 2});
  const auto perm = FactorPermutation::from_order({1, 2, 0});
  const Operator rho = random_density_matrix(s, rng).entries();
  const Operator p = factor_permutation_operator(s, perm);
  CHECK(max_abs_diff(permute_factors(s, rho, perm), p * rho * p.adjoint()) <= 1e-12);
  CHECK(max_abs_diff(p * p.adjoint(), Operator::Identity(12, 12)) <= 1e-12);
  CHECK(permuted_shape(s, perm) == RegisterShape({3, 2, 2}));
}

TEST_CASE("permutation moves digits to their new positions") {
  const RegisterShape s({2, 3});
  const auto perm = FactorPermutation({1, 0});
  // |1,2> in (2,3) is index 5; after swap it is |2,1> in (3,2): index 5.
  // |0,1> is index 1; after swap |1,0> in (3,2): index 2.
  Amplitudes in = Amplitudes::Zero(6);
  in(1) = 1.0;
  const Amplitudes out = permute_factors(s, in, perm);
  CHECK(std::abs(out(2) - Complex(1.0)) < 1e-15);
}

TEST_CASE("bipartition orders sides so N2 <= N1") {
  const RegisterShape s({2, 2, 2});
  const Bipartition a(s, {0});
  CHECK(a.side_two() == std::vector<int>{0});
  CHECK(a.side_one() == std::vector<int>{1, 2});
  CHECK(a.dim_two() == 2);
  CHECK(a.dim_one() == 4);
  const Bipartition b(s, {2, 1});
  CHECK(b.side_two() == std::vector<int>{0});
  CHECK(b.dim_two() <= b.dim_one());

  const Bipartition c(RegisterShape({5, 2}), {0});
  CHECK(c.side_two() == std::vector<int>{1});
  CHECK(c.to_cut_order().order() == std::vector<int>{0, 1});
}

TEST_CASE("bipartition rejects degenerate sides") {
  const RegisterShape s({2, 2, 2});
  CHECK_THROWS_AS(Bipartition(s, {}), QbcError);
  CHECK_THROWS_AS(Bipartition(s, {0, 1, 2}), QbcError);
  CHECK_THROWS_AS(Bipartition(s, {3}), QbcError);
  CHECK_THROWS_AS(Bipartition(s, {1, 1}), QbcError);
}

TEST_CASE("single factor cuts enumerate every factor") {
  const auto cuts = single_factor_cuts(RegisterShape::uniform(3, 3));
  REQUIRE(cuts.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(cuts[static_cast<std::size_t>(k)].side_two() == std::vector<int>{k});
    CHECK(cuts[static_cast<std::size_t>(k)].dim_two() == 3);
  }
  CHECK(cuts[0].label() == "{0}|{1,2}");
}

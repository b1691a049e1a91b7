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

#include <cmath>
#include <set>

#include "ameqbc/gates.hpp"
#include "ameqbc/random.hpp"

using namespace ameqbc;

TEST_CASE("Fourier gate at d=2 is the Hadamard") {
  const Operator f = fourier_gate(2);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f(0, 0) - Complex(h)) <= 1e-15);
  CHECK(std::abs(f(0, 1) - Complex(h)) <= 1e-15);
  CHECK(std::abs(f(1, 0) - Complex(h)) <= 1e-15);
  CHECK(std::abs(f(1, 1) - Complex(-h)) <= 1e-15);
}

TEST_CASE("Fourier gate is unitary") {
  for (int d = 2; d <= 7; ++d) {
    const Operator f = fourier_gate(d);
    CHECK(max_abs_diff(f * f.adjoint(), Operator::Identity(d, d)) <= 1e-12);
  }
  CHECK_THROWS_AS(fourier_gate(1), QbcError);
  CHECK_THROWS_AS(fourier_gate(0), QbcError);
}

TEST_CASE("Fourier gate entries are d^-1/2 w^{kl}") {
  const int d = 5;
  const Operator f = fourier_gate(d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      CHECK(std::abs(f(k, l) - std::polar(1.0 / std::sqrt(double(d)), 2.0 * M_PI * k * l / d)) <= 1e-12);
}

TEST_CASE("tilde basis is orthonormal") {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        const Complex ip = basis_vector(BasisKind::X, k, d).inner(basis_vector(BasisKind::X, l, d));
        CHECK(std::abs(ip - Complex(k == l ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("tilde basis is F^dagger applied to the computational basis") {
  const int d = 4;
  const Operator f = fourier_gate(d);
  for (int k = 0; k < d; ++k) {
    const Amplitudes expect = f.adjoint().col(k);
    CHECK((basis_vector(BasisKind::X, k, d).amplitudes() - expect).norm() <= 1e-12);
  }
}

TEST_CASE("basis vector examples") {
  const auto z = basis_vector(BasisKind::Z, 2, 3);
  CHECK(std::abs(z[0]) == 0.0);
  CHECK(std::abs(z[1]) == 0.0);
  CHECK(std::abs(z[2] - Complex(1.0)) == 0.0);
  for (int d = 2; d <= 5; ++d) {
    const auto x = basis_vector(BasisKind::X, 0, d);
    for (int i = 0; i < d; ++i) CHECK(std::abs(x[i] - Complex(1.0 / std::sqrt(double(d)))) <= 1e-15);
  }
  const Permutation pi({2, 0, 1});
  const auto p = basis_vector(BasisKind::Z, 1, 3, pi);
  CHECK(std::abs(p[0] - Complex(1.0)) == 0.0);
}

TEST_CASE("basis vector rejects out-of-range input") {
  CHECK_THROWS_AS(basis_vector(BasisKind::Z, 3, 3), QbcError);
  CHECK_THROWS_AS(basis_vector(BasisKind::X, -1, 3), QbcError);
  CHECK_THROWS_AS(basis_vector(BasisKind::Z, 0, 3, Permutation::identity(4)), QbcError);
}

TEST_CASE("permutations validate, compose and enumerate") {
  CHECK_THROWS_AS(Permutation({0, 0}), QbcError);
  CHECK_THROWS_AS(Permutation({1, 2}), QbcError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), QbcError);
  const Permutation p({2, 0, 1});
  CHECK(p(0) == 2);
  CHECK_THROWS_AS(p(3), QbcError);
  const Permutation q = p.inverse();
  for (int k = 0; k < 3; ++k) CHECK(q(p(k)) == k);

  for (int d = 1; d <= 5; ++d) {
    const auto all = Permutation::all(d);
    std::set<std::vector<int>> distinct;
    for (const auto& x : all) distinct.insert(x.images());
    std::size_t fact = 1;
    for (int k = 2; k <= d; ++k) fact *= static_cast<std::size_t>(k);
    CHECK(all.size() == fact);
    CHECK(distinct.size() == fact);
    CHECK(all.front() == Permutation::identity(d));
  }
}

TEST_CASE("random permutations are bijections and seed deterministic") {
  Rng a(77);
  Rng b(77);
  for (int t = 0; t < 50; ++t) {
    const auto p = Permutation::random(6, a);
    CHECK(p == Permutation::random(6, b));
    std::set<int> seen(p.images().begin(), p.images().end());
    CHECK(seen.size() == 6);
  }
}

TEST_CASE("roots of unity reduce their exponent") {
  CHECK(std::abs(root_of_unity(5, 5) - Complex(1.0)) <= 1e-15);
  CHECK(std::abs(root_of_unity(4, 1) - Complex(0.0, 1.0)) <= 1e-15);
  CHECK(std::abs(root_of_unity(4, -1) - Complex(0.0, -1.0)) <= 1e-15);
  CHECK(std::abs(root_of_unity(3, 7) - root_of_unity(3, 1)) <= 1e-15);
}

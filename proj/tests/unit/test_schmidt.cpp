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

#include "ameqbc/protocol.hpp"
#include "ameqbc/random.hpp"
#include "ameqbc/schmidt.hpp"

using namespace ameqbc;

TEST_CASE("product state has a single Schmidt coefficient") {
  const RegisterShape s({2, 2});
  const auto data = schmidt_decompose(StateVector::basis(s, 0), Bipartition(s, {1}));
  CHECK(data.rank() == 1);
  CHECK(std::abs(data.coefficients[0] - 1.0) <= 1e-12);
  CHECK(data.lambda_max == data.coefficients[0]);
}

TEST_CASE("maximally entangled state has flat Schmidt spectrum") {
  for (int d = 2; d <= 5; ++d) {
    Amplitudes a = Amplitudes::Zero(d * d);
    for (int j = 0; j < d; ++j) a(j * d + j) = 1.0 / std::sqrt(double(d));
    const RegisterShape s = RegisterShape::uniform(d, 2);
    const auto data = schmidt_decompose(StateVector(s, a), Bipartition(s, {1}));
    REQUIRE(data.rank() == static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) CHECK(std::abs(data.coefficients[i] - 1.0 / d) <= 1e-12);
  }
}

TEST_CASE("Xi^0 at d=2 across Alice|Bob has coefficients one half") {
  const ProtocolParams params(2);
  const auto xi0 = post_state_closed_form(params, 0, Permutation::identity(2), 0);
  const auto data = schmidt_decompose(xi0, params.alice_bob_cut());
  REQUIRE(data.rank() == 2);
  CHECK(std::abs(data.coefficients[0] - 0.5) <= 1e-12);
  CHECK(std::abs(data.coefficients[1] - 0.5) <= 1e-12);
}

TEST_CASE("random Schmidt data reconstructs the state and is orthonormal") {
  Rng rng(21);
  const RegisterShape s({2, 3, 2, 3});
  const Bipartition cut(s, {0, 3});
  for (int t = 0; t < 20; ++t) {
    const auto psi = random_state(s, rng);
    const auto data = schmidt_decompose(psi, cut);
    double sum = 0.0;
    for (std::size_t i = 0; i < data.coefficients.size(); ++i) {
      sum += data.coefficients[i];
      if (i > 0) CHECK(data.coefficients[i] <= data.coefficients[i - 1] + 1e-15);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    const Amplitudes ordered = permute_factors(s, psi.amplitudes(), cut.to_cut_order());
    CHECK((data.reconstruct_cut_order() - ordered).norm() <= 1e-12);
    const auto gl = gram_matrix(data.left_vectors);
    const auto gr = gram_matrix(data.right_vectors);
    CHECK(max_abs_diff(gl, Operator::Identity(gl.rows(), gl.cols())) <= 1e-12);
    CHECK(max_abs_diff(gr, Operator::Identity(gr.rows(), gr.cols())) <= 1e-12);
    for (const auto& v : data.left_vectors) {
      for (Index k = 0; k < v.amplitudes().size(); ++k) {
        if (std::abs(v[k]) > 1e-12) {
          CHECK(std::abs(v[k].imag()) <= 1e-12);
          CHECK(v[k].real() > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("Schmidt coefficients equal the spectrum of the smaller reduced state") {
  Rng rng(22);
  const RegisterShape s({3, 2, 2});
  const Bipartition cut(s, {0});
  for (int t = 0; t < 10; ++t) {
    const auto psi = random_state(s, rng);
    const auto data = schmidt_decompose(psi, cut);
    const auto reduced = partial_trace(psi, cut.side_two());
    Eigen::SelfAdjointEigenSolver<Operator> es(reduced.entries());
    const auto ev = es.eigenvalues();
    for (Index i = 0; i < ev.size(); ++i) {
      CHECK(std::abs(ev(ev.size() - 1 - i) - data.coefficients[static_cast<std::size_t>(i)]) <= 1e-12);
    }
  }
}

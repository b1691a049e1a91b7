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

#include "ameqbc/adversary.hpp"
#include "oracles/protocol_oracle.hpp"

using namespace ameqbc;

namespace {

AttackInstance proto(int d, Direction dir, int lone = 0) {
  const ProtocolParams params(d);
  return protocol_instance(params, Permutation::identity(d), 0,
                           single_factor_cuts(params.alice_shape())[static_cast<std::size_t>(lone)], dir);
}

}  // namespace

TEST_CASE("identity channel with equal families switches with certainty") {
  Rng rng(1);
  const Bipartition cut(RegisterShape::uniform(2, 3), {0});
  auto inst = random_instance(2, cut, rng);
  inst.lambdas = {0.5, 0.5};
  inst.x_family = inst.y_family;
  const auto id = KrausChannel::identity(cut.shape());
  CHECK(std::abs(switch_probability(inst, id) - 1.0) <= 1e-12);
}

TEST_CASE("identity channel on the protocol instance equals the committed-state overlap") {
  for (int d = 2; d <= 4; ++d) {
    const double overlap = std::norm(oracle::committed(d, 1, 0).dot(oracle::committed(d, 0, 0)));
    for (Direction dir : {Direction::OneToZero, Direction::ZeroToOne}) {
      const auto inst = proto(d, dir);
      const auto id = KrausChannel::identity(inst.alice_shape());
      CHECK(std::abs(switch_probability(inst, id) - overlap) <= 1e-12);
      CHECK(std::abs(switch_probability_via_fidelity(inst, id) - overlap) <= 1e-9);
    }
    CHECK(std::abs(overlap - 1.0 / d) <= 1e-12);
  }
}

TEST_CASE("switch probability paths agree on random separable channels") {
  Rng rng(2);
  for (int d = 2; d <= 3; ++d) {
    const auto cuts = single_factor_cuts(RegisterShape::uniform(d, 3));
    for (int t = 0; t < 20; ++t) {
      const auto& cut = cuts[static_cast<std::size_t>(t % 3)];
      const auto inst = random_instance(1 + static_cast<std::size_t>(t) % static_cast<std::size_t>(d), cut, rng);
      const auto sep = random_separable_channel(cut, {1 + t % 2, 1 + (t / 2) % 2}, rng);
      const auto kc = sep.to_kraus_channel();
      const double fast = switch_probability(inst, sep);
      CHECK(std::abs(fast - switch_probability(inst, kc)) <= 1e-12);
      CHECK(std::abs(fast - switch_probability_via_fidelity(inst, kc)) <= 1e-9);
    }
  }
}

TEST_CASE("switch probability rejects a channel on a different register") {
  const auto inst = proto(2, Direction::OneToZero);
  CHECK_THROWS_AS(switch_probability(inst, KrausChannel::identity(RegisterShape::uniform(2, 4))), QbcError);
  CHECK_THROWS_AS(switch_probability(inst, KrausChannel::identity(RegisterShape::uniform(3, 3))), QbcError);
}

TEST_CASE("unrestricted attack switches the protocol with certainty") {
  for (int d = 2; d <= 4; ++d) {
    for (Direction dir : {Direction::OneToZero, Direction::ZeroToOne}) {
      const auto inst = proto(d, dir);
      const auto attack = unrestricted_attack(inst);
      const Index n = inst.alice_shape().total_dim();
      CHECK(max_abs_diff(attack.unitary.adjoint() * attack.unitary, Operator::Identity(n, n)) <= 1e-9);
      CHECK(std::abs(attack.achieved_p - 1.0) <= 1e-9);
      const auto ch = KrausChannel::full(inst.alice_shape(), {attack.unitary});
      CHECK(std::abs(switch_probability(inst, ch) - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("unrestricted attack is the identity on the span when families coincide") {
  Rng rng(3);
  const Bipartition cut(RegisterShape::uniform(3, 3), {1});
  auto inst = random_instance(3, cut, rng);
  inst.x_family = inst.y_family;
  const auto attack = unrestricted_attack(inst);
  for (const auto& y : inst.y_family) {
    CHECK((attack.unitary * y.amplitudes() - y.amplitudes()).norm() <= 1e-9);
  }
}

TEST_CASE("unrestricted attack rejects non-orthonormal families") {
  auto inst = proto(2, Direction::OneToZero);
  inst.x_family[1] = inst.x_family[0];
  CHECK_THROWS_AS(unrestricted_attack(inst), QbcError);
  CHECK_THROWS_AS(inst.validate(), QbcError);
}

TEST_CASE("analytic bounds") {
  for (int d = 2; d <= 5; ++d) {
    for (int lone = 0; lone < 3; ++lone) {
      const auto b = analytic_bounds(proto(d, Direction::OneToZero, lone));
      CHECK(std::abs(b.p0 - 1.0 / d) <= 1e-12);
      CHECK(std::abs(b.p1 - 1.0 / d) <= 1e-12);
    }
  }
  const auto raw = switch_bounds(1.0, 2);
  CHECK(raw.p0 == 2.0);
  CHECK(raw.p1 == 0.5);
  CHECK(std::min(1.0, raw.p0) == 1.0);
  CHECK(switch_bounds(0.3, 1).p1 == 1.0);
  CHECK_THROWS_AS(switch_bounds(0.5, 0), QbcError);
}

TEST_CASE("direction bound picks the matching inequality") {
  const auto inst = proto(3, Direction::ZeroToOne);
  const Bipartition cut = inst.cut;
  CHECK(std::abs(direction_bound(inst, cut) - 1.0 / 3) <= 1e-12);
  Rng rng(4);
  const auto r = random_instance(2, cut, rng, Direction::ZeroToOne);
  CHECK(std::abs(direction_bound(r, cut) - r.lambda_max() * r.lambda_max() * 3) <= 1e-12);
  CHECK(std::abs(direction_bound(r.with_direction(Direction::OneToZero), cut) - 1.0 / 3) <= 1e-12);
}

TEST_CASE("lemma cheat bound is 1/d") {
  CHECK(std::abs(lemma_cheat_bound(3, 2) - 0.5) <= 1e-12);
  CHECK(std::abs(lemma_cheat_bound(3, 3) - 1.0 / 3) <= 1e-12);
  CHECK(std::abs(lemma_cheat_bound(5, 2) - 0.5) <= 1e-12);
  for (int n = 2; n <= 6; ++n)
    for (int d = 2; d <= 5; ++d) CHECK(std::abs(lemma_cheat_bound(n, d) - 1.0 / d) <= 1e-12);
}

TEST_CASE("directions parse and print") {
  CHECK(to_string(Direction::ZeroToOne) == "0to1");
  CHECK(to_string(Direction::OneToZero) == "1to0");
  CHECK(parse_direction("0to1") == Direction::ZeroToOne);
  CHECK(parse_direction("1to0") == Direction::OneToZero);
  CHECK_THROWS_AS(parse_direction("sideways"), QbcError);
}

TEST_CASE("random instances have maximally entangled x and product y") {
  Rng rng(5);
  for (int d = 2; d <= 3; ++d) {
    for (const auto& cut : single_factor_cuts(RegisterShape::uniform(d, 3))) {
      for (std::size_t m = 1; m <= static_cast<std::size_t>(cut.dim_two()); ++m) {
        const auto inst = random_instance(m, cut, rng);
        inst.validate();
        const Operator mixed = Operator::Identity(cut.dim_two(), cut.dim_two()) / double(cut.dim_two());
        for (std::size_t i = 0; i < m; ++i) {
          CHECK(max_abs_diff(partial_trace(inst.x_family[i], cut.side_two()).entries(), mixed) <= 1e-9);
          CHECK(schmidt_decompose(inst.y_family[i], cut).rank() == 1);
        }
      }
      CHECK_THROWS_AS(random_instance(static_cast<std::size_t>(cut.dim_two()) + 1, cut, rng), QbcError);
      CHECK_THROWS_AS(random_instance(0, cut, rng), QbcError);
    }
  }
}

TEST_CASE("bounds hold on random instances and channels at d=2, M=2") {
  Rng rng(6);
  const auto cuts = single_factor_cuts(RegisterShape::uniform(2, 3));
  double worst1 = -1.0;
  double worst0 = -1.0;
  for (int t = 0; t < 1000; ++t) {
    const auto& cut = cuts[static_cast<std::size_t>(t % 3)];
    const auto inst = random_instance(2, cut, rng);
    const auto sep = random_separable_channel(cut, {1 + t % 2, 1 + (t / 2) % 2}, rng);
    const auto b = analytic_bounds(inst);
    worst1 = std::max(worst1, switch_probability(inst, sep) - b.p1);
    worst0 = std::max(worst0, switch_probability(inst.with_direction(Direction::ZeroToOne), sep) - b.p0);
  }
  CHECK(worst1 <= 1e-9);
  CHECK(worst0 <= 1e-9);
}

TEST_CASE("unrestricted attacks exceed the separable bound on random instances") {
  Rng rng(7);
  const Bipartition cut(RegisterShape::uniform(2, 3), {2});
  const auto inst = random_instance(2, cut, rng);
  CHECK(std::abs(unrestricted_attack(inst).achieved_p - 1.0) <= 1e-9);
  CHECK(analytic_bounds(inst).p1 < 1.0);
}

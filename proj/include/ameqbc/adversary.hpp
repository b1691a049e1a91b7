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

#include <string>
#include <vector>

#include "ameqbc/channels.hpp"

namespace ameqbc {

/// Which commitment Alice tries to switch: ZeroToOne evaluates p_s(0)
/// (committed 0, opens 1), OneToZero evaluates p_s(1).
enum class Direction { ZeroToOne, OneToZero };

std::string to_string(Direction dir);
Direction parse_direction(const std::string& text);

/// Two purifications sharing Bob's Schmidt basis:
///   Psi_0 = sum_i sqrt(lambda_i)|x_i>|i>,  Psi_1 = sum_i sqrt(lambda_i)|y_i>|i>.
struct AttackInstance {
  std::vector<double> lambdas;
  std::vector<StateVector> x_family;
  std::vector<StateVector> y_family;
  Bipartition cut;
  Direction direction = Direction::OneToZero;

  const RegisterShape& alice_shape() const { return cut.shape(); }
  std::size_t terms() const { return lambdas.size(); }
  double lambda_max() const;
  /// Family of the committed state (x for ZeroToOne, y for OneToZero).
  const std::vector<StateVector>& source() const;
  const std::vector<StateVector>& target() const;
  AttackInstance with_direction(Direction dir) const;
  AttackInstance with_cut(const Bipartition& new_cut) const;

  /// Throws unless lambdas are a probability vector and both families are
  /// orthonormal within 1e-9 on the cut's register.
  void validate() const;
};

/// Instance built from Xi^0_{pi,m} and Xi^1_{pi,m}: x/y families from the
/// protocol, lambda_i = 1/d.
AttackInstance protocol_instance(const ProtocolParams& params, const Permutation& pi, int m,
                                 const Bipartition& cut, Direction dir);

/// sum_j |sum_i lambda_i <target_i|K_j|source_i>|^2 for a channel on Alice's
/// register.
double switch_probability(const AttackInstance& instance, const KrausChannel& channel);
/// Same quantity using the product structure of the Kraus operators.
double switch_probability(const AttackInstance& instance, const SeparableChannel& channel);
/// F(|Psi_target><Psi_target|, (N x 1_B)(|Psi_source><Psi_source|)) computed
/// on the joint register with Bob's qudit made explicit.
double switch_probability_via_fidelity(const AttackInstance& instance,
                                       const KrausChannel& channel);

struct SwitchBounds {
  double p0;  ///< lambda_max^2 N2, may exceed 1
  double p1;  ///< 1 / N2
};

SwitchBounds switch_bounds(double lambda_max, Index n2);
SwitchBounds analytic_bounds(const AttackInstance& instance);
/// Bound of the instance's own direction for a separable attack across `cut`.
double direction_bound(const AttackInstance& instance, const Bipartition& cut);

/// max over N2 in {d, ..., d^floor(n/2)} of min over Bob's uniform choices
/// lambda_max = 1/M (M = 1..d^n) of max{1/N2, lambda_max^2 N2}.
double lemma_cheat_bound(int n, int d);

struct UnrestrictedAttack {
  Operator unitary;
  double achieved_p;
};

/// Unitary with U|source_i> = |target_i>, completed on the orthogonal
/// complement, and its switch probability.
UnrestrictedAttack unrestricted_attack(const AttackInstance& instance);

/// Random instance with M Schmidt terms: x_i = (U (x) V) applied to distinct
/// generalized Bell states across `cut`, y_i = |a_i>|b_i> from Haar bases,
/// lambda from the uniform simplex. Requires 1 <= M <= N2.
AttackInstance random_instance(std::size_t terms, const Bipartition& cut, Rng& rng,
                               Direction dir = Direction::OneToZero);

}  // namespace ameqbc

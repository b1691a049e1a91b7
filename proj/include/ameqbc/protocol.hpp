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

#include <vector>

#include "ameqbc/gates.hpp"
#include "ameqbc/random.hpp"
#include "ameqbc/schmidt.hpp"

namespace ameqbc {

/// Qudit dimension of the three-qudit commitment scheme. Shared registers are
/// laid out as (A0, A1, A2, B); the initial register is (anc, A0, A1, A2, B).
class ProtocolParams {
 public:
  explicit ProtocolParams(int d);
  int d() const { return d_; }
  RegisterShape alice_shape() const { return RegisterShape::uniform(d_, 3); }
  RegisterShape shared_shape() const { return RegisterShape::uniform(d_, 4); }
  RegisterShape initial_shape() const { return RegisterShape::uniform(d_, 5); }
  /// Alice's three qudits versus Bob's qudit on the shared register.
  Bipartition alice_bob_cut() const;

 private:
  int d_;
};

inline constexpr int kAncFactor = 0;
inline constexpr int kBobFactor = 3;

struct CommitmentRecord {
  int b = 0;
  Permutation pi;
  int m = 0;
  StateVector shared_state;  ///< on (A0, A1, A2, B); anc dropped
};

/// |Phi_l> = d^{-1/2} sum_j w^{jl} |jjj>_A |j+l mod d>_B.
StateVector phi_state(int l, int d);

/// |Xi> = d^{-1/2} sum_l |l>_anc |Phi_l>_AB.
StateVector xi_state(int d);

/// Anc basis used to commit b under pi: |~pi(k)> for b = 0, |pi(k)> for b = 1.
StateVector commit_basis_vector(int b, const Permutation& pi, int k);

/// One outcome of Alice's anc measurement on |Xi>, simulated on the full
/// register: Born probability and the normalized A x B remainder.
struct MeasurementBranch {
  double probability;
  StateVector shared_state;
};
MeasurementBranch commit_branch(const ProtocolParams& params, int b, const Permutation& pi, int m);

/// Samples the outcome m with Born weights and records the shared state.
CommitmentRecord commit(const ProtocolParams& params, int b, const Permutation& pi, Rng& rng);

/// Xi^1_{pi,m} = |Phi_{pi(m)}>; Xi^0_{pi,m} = d^{-1/2} sum_l w^{pi(m) l}|Phi_l>.
StateVector post_state_closed_form(const ProtocolParams& params, int b, const Permutation& pi,
                                   int m);

/// Probability that Bob's projection onto Xi^{claimed_b}_{claimed_pi, m}
/// accepts `state`.
double open_verify(const CommitmentRecord& record, int claimed_b, const Permutation& claimed_pi,
                   const DensityMatrix& state);

/// One sampled accept/reject of open_verify.
bool open_verify_sample(const CommitmentRecord& record, int claimed_b,
                        const Permutation& claimed_pi, const DensityMatrix& state, Rng& rng);

/// Alice's conditional vectors v_j = sqrt(d) (1 x <j|_B) Xi^b_{pi,m}.
std::vector<StateVector> alice_family(const ProtocolParams& params, int b, const Permutation& pi,
                                      int m);

/// Explicit formulas for the same family: for b = 1,
/// y_j = w^{(j-p)p} |(j-p)^{x3}>; for b = 0,
/// x_j = d^{-1/2} sum_l w^{pl + (j-l)l} |(j-l)^{x3}>, with p = pi(m).
std::vector<StateVector> alice_family_closed_form(const ProtocolParams& params, int b,
                                                  const Permutation& pi, int m);

/// Schmidt data of Xi^b_{pi,m} across A|B labeled by Bob's computational
/// basis: coefficients 1/d, left vectors from alice_family, right vectors |j>.
SchmidtData schmidt_family(const ProtocolParams& params, int b, const Permutation& pi, int m);

}  // namespace ameqbc

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

#include <cstdint>
#include <utility>
#include <vector>

#include "ameqbc/protocol.hpp"
#include "ameqbc/random.hpp"

namespace ameqbc {

/// Trace-preserving channel rho -> sum_j K_j rho K_j^dagger on a register.
/// Kraus operators act on the ordered `support` factors and as the identity
/// on every other factor; they are stored at support size only.
class KrausChannel {
 public:
  /// Throws unless sum_j K_j^dagger K_j = 1 within 1e-9.
  KrausChannel(RegisterShape shape, std::vector<int> support, std::vector<Operator> kraus_ops);

  /// Channel whose operators act on the whole register.
  static KrausChannel full(RegisterShape shape, std::vector<Operator> kraus_ops);
  static KrausChannel identity(RegisterShape shape);

  const RegisterShape& shape() const { return shape_; }
  const std::vector<int>& support() const { return support_; }
  const std::vector<Operator>& kraus_ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  /// max |sum_j K_j^dagger K_j - 1|.
  double trace_preservation_error() const;
  /// Kraus operator j embedded in the full register.
  Operator full_kraus(std::size_t j) const;
  /// sum_j K_j (x) conj(K_j) on the support.
  Operator support_superoperator() const;

  DensityMatrix apply(const DensityMatrix& rho) const;
  /// Action on an arbitrary square operator of the register's size.
  Operator apply(const Operator& x) const;

 private:
  RegisterShape shape_;
  std::vector<int> support_;
  std::vector<Operator> ops_;
};

/// Kraus rank of each local factor of a product-isometry channel.
struct KrausRank {
  int side_one = 1;
  int side_two = 1;
  int total() const { return side_one * side_two; }
};

/// Channel with Kraus operators K_j1 (x) K_j2 across `cut`, where K_j1 acts on
/// cut.side_one() and K_j2 on cut.side_two().
class SeparableChannel {
 public:
  using FactorPair = std::pair<Operator, Operator>;

  /// Throws unless the lifted Kraus set is trace preserving within 1e-9.
  SeparableChannel(Bipartition cut, std::vector<FactorPair> factor_pairs);

  /// Local isometries V1: A1 -> A1 x E1 and V2: A2 -> A2 x E2 (environment
  /// least significant) sliced into Kraus pairs <e1|V1 (x) <e2|V2.
  static SeparableChannel from_isometries(Bipartition cut, const Operator& v1, int rank_one,
                                          const Operator& v2, int rank_two);

  const Bipartition& cut() const { return cut_; }
  const std::vector<FactorPair>& factor_pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  /// P^dagger (K_j1 (x) K_j2) P on the cut's register, P reordering the
  /// register to (side one, side two).
  std::vector<Operator> lifted_kraus() const;
  KrausChannel to_kraus_channel() const;

 private:
  Bipartition cut_;
  std::vector<FactorPair> pairs_;
};

/// Extends a separable channel on Alice's factors by the identity on Bob's
/// register `bob`. The channel's cut must be a cut of Alice's register only.
KrausChannel lift_to_alice(const SeparableChannel& channel, const RegisterShape& bob);
/// Lift onto the protocol's shared register (A0, A1, A2, B). Throws when the
/// channel's cut is not a cut of Alice's three qudits (e.g. it includes B).
KrausChannel lift_to_alice(const SeparableChannel& channel, const ProtocolParams& params);

/// Product-isometry sampler: Haar isometries V1, V2 with environment
/// dimensions given by `rank`.
SeparableChannel random_separable_channel(const Bipartition& cut, KrausRank rank, Rng& rng);

/// Alice's commit measurement M^pi_b on (anc, A, B): Kraus operators
/// |m><beta_{pi(m)}| on anc, beta the X basis for b = 0 and Z basis for b = 1.
KrausChannel measurement_channel(int b, const Permutation& pi, int d);

enum class AveragingMode { Exact, ClosedForm, Sampled };

struct AveragingOptions {
  int sample_count = 64;
  std::uint64_t seed = 0;
};

/// M_b = average of M^pi_b over pi. Exact enumerates S_d (d <= 5); Sampled
/// averages over a seeded sample; ClosedForm is rho -> (1/d) sum_{m,k}
/// (|m><k| x 1) rho (|k><m| x 1).
KrausChannel averaged_measurement_channel(int b, int d, AveragingMode mode,
                                          const AveragingOptions& options = {});

/// Completely depolarizing channel on the whole register.
KrausChannel depolarizing_channel(const RegisterShape& shape);

}  // namespace ameqbc

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
#include <optional>
#include <vector>

#include "ameqbc/adversary.hpp"

namespace ameqbc {

/// Multi-restart local search over product-isometry channels.
///
/// Restart 0 starts from the identity channel; the others start from Haar
/// isometries. Each iteration perturbs both local isometries by a Ginibre
/// step and retracts with the polar decomposition; the move is kept only if
/// the switch probability improves. The step shrinks geometrically.
struct OptimizerConfig {
  int restarts = 32;
  int iterations = 2000;
  /// Restarts cycle through all (r1, r2) with r1 * r2 <= max_kraus_rank.
  int max_kraus_rank = 4;
  double initial_step = 0.3;
  double step_decay = 0.95;
  int decay_interval = 50;
  bool record_trace = true;
};

struct TraceRow {
  int restart;
  int iteration;
  double best_p;  ///< best value of this restart so far
};

struct AttackResult {
  Direction direction;
  Bipartition cut;
  double achieved_p;
  /// Raw analytic bound for the direction and cut (not clamped to 1).
  double bound;
  KrausRank rank;
  int best_restart;
  SeparableChannel channel;
  std::vector<TraceRow> trace;
};

/// Rank schedule used by the optimizer, in restart order.
std::vector<KrausRank> kraus_rank_schedule(int max_kraus_rank);

AttackResult optimize_separable_attack(const AttackInstance& instance, const Bipartition& cut,
                                       const OptimizerConfig& config, std::uint64_t seed);

/// Runs the optimizer on every single-qudit cut of Alice's register and keeps
/// the per-cut results; `best` is the maximum (first cut wins ties).
struct CutSweep {
  std::vector<AttackResult> per_cut;
  std::size_t best = 0;
  const AttackResult& best_result() const { return per_cut.at(best); }
};

CutSweep optimize_over_cuts(const AttackInstance& instance, const OptimizerConfig& config,
                            std::uint64_t seed);

}  // namespace ameqbc

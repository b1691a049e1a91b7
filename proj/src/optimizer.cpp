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

#include "ameqbc/optimizer.hpp"

#include <cmath>

namespace ameqbc {

std::vector<KrausRank> kraus_rank_schedule(int max_kraus_rank) {
  if (max_kraus_rank < 1) throw QbcError("max_kraus_rank must be >= 1");
  std::vector<KrausRank> out;
  for (int r1 = 1; r1 <= max_kraus_rank; ++r1) {
    for (int r2 = 1; r1 * r2 <= max_kraus_rank; ++r2) out.push_back({r1, r2});
  }
  return out;
}

namespace {

// Objective specialised to one cut: families are reshaped once.
class CutObjective {
 public:
  CutObjective(const AttackInstance& instance, const Bipartition& cut)
      : lambdas_(instance.lambdas), n1_(cut.dim_one()), n2_(cut.dim_two()) {
    const auto perm = cut.to_cut_order();
    auto reshape = [&](const std::vector<StateVector>& fam, std::vector<Operator>& out) {
      for (const auto& v : fam) {
        const Amplitudes moved = permute_factors(cut.shape(), v.amplitudes(), perm);
        out.push_back(Eigen::Map<const Operator>(moved.data(), n2_, n1_).transpose());
      }
    };
    reshape(instance.source(), src_);
    reshape(instance.target(), tgt_conj_);
    for (auto& t : tgt_conj_) t = t.conjugate().eval();
  }

  double operator()(const Operator& v1, int r1, const Operator& v2, int r2) const {
    double total = 0.0;
    Operator k1(n1_, n1_);
    Operator k2(n2_, n2_);
    for (int e1 = 0; e1 < r1; ++e1) {
      for (Index r = 0; r < n1_; ++r) k1.row(r) = v1.row(r * r1 + e1);
      for (int e2 = 0; e2 < r2; ++e2) {
        for (Index r = 0; r < n2_; ++r) k2.row(r) = v2.row(r * r2 + e2);
        Complex amp = 0.0;
        for (std::size_t i = 0; i < lambdas_.size(); ++i) {
          amp += lambdas_[i] * tgt_conj_[i].cwiseProduct(k1 * src_[i] * k2.transpose()).sum();
        }
        total += std::norm(amp);
      }
    }
    return total;
  }

 private:
  std::vector<double> lambdas_;
  Index n1_;
  Index n2_;
  std::vector<Operator> src_;
  std::vector<Operator> tgt_conj_;
};

Operator identity_isometry(Index n, int rank) {
  Operator v = Operator::Zero(n * rank, n);
  for (Index a = 0; a < n; ++a) v(a * rank, a) = 1.0;
  return v;
}

// Polar retraction Y (Y^dagger Y)^{-1/2} onto the isometries.
Operator retract(const Operator& y) {
  Eigen::SelfAdjointEigenSolver<Operator> es(y.adjoint() * y);
  const Eigen::VectorXd inv_sqrt = es.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
  return y * (es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint());
}

Operator perturb(const Operator& v, double step, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Operator dir(v.rows(), v.cols());
  for (Index j = 0; j < v.cols(); ++j) {
    for (Index i = 0; i < v.rows(); ++i) {
      const double re = g(rng);
      const double im = g(rng);
      dir(i, j) = Complex(re, im);
    }
  }
  dir /= std::sqrt(2.0 * static_cast<double>(v.size()));
  return retract(v + step * dir);
}

}  // namespace

AttackResult optimize_separable_attack(const AttackInstance& instance, const Bipartition& cut,
                                       const OptimizerConfig& config, std::uint64_t seed) {
  if (!(cut.shape() == instance.alice_shape())) {
    throw QbcError("optimize_separable_attack: cut is not a cut of Alice's register");
  }
  if (config.restarts < 1) throw QbcError("optimizer needs at least one restart");
  if (config.iterations < 0) throw QbcError("iterations must be >= 0");
  if (config.decay_interval < 1) throw QbcError("decay_interval must be >= 1");
  const auto schedule = kraus_rank_schedule(config.max_kraus_rank);
  const CutObjective objective(instance, cut);
  const Index n1 = cut.dim_one();
  const Index n2 = cut.dim_two();

  std::optional<AttackResult> best;
  std::vector<TraceRow> trace;
  for (int restart = 0; restart < config.restarts; ++restart) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    const KrausRank rank = schedule[static_cast<std::size_t>(restart) % schedule.size()];
    Operator v1;
    Operator v2;
    if (restart == 0) {
      v1 = identity_isometry(n1, rank.side_one);
      v2 = identity_isometry(n2, rank.side_two);
    } else {
      v1 = haar_isometry(n1 * rank.side_one, n1, rng);
      v2 = haar_isometry(n2 * rank.side_two, n2, rng);
    }
    double value = objective(v1, rank.side_one, v2, rank.side_two);
    if (config.record_trace) trace.push_back({restart, 0, value});
    double step = config.initial_step;
    for (int it = 1; it <= config.iterations; ++it) {
      Operator c1 = perturb(v1, step, rng);
      Operator c2 = perturb(v2, step, rng);
      const double candidate = objective(c1, rank.side_one, c2, rank.side_two);
      if (candidate > value) {
        value = candidate;
        v1 = std::move(c1);
        v2 = std::move(c2);
      }
      if (it % config.decay_interval == 0) step *= config.step_decay;
      if (config.record_trace) trace.push_back({restart, it, value});
    }
    if (!best || value > best->achieved_p) {
      best = AttackResult{instance.direction,
                          cut,
                          value,
                          direction_bound(instance, cut),
                          rank,
                          restart,
                          SeparableChannel::from_isometries(cut, v1, rank.side_one, v2,
                                                            rank.side_two),
                          {}};
    }
  }
  best->trace = std::move(trace);
  return std::move(*best);
}

CutSweep optimize_over_cuts(const AttackInstance& instance, const OptimizerConfig& config,
                            std::uint64_t seed) {
  CutSweep sweep;
  const auto cuts = single_factor_cuts(instance.alice_shape());
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    sweep.per_cut.push_back(
        optimize_separable_attack(instance, cuts[c], config, derive_seed(seed, 1000 + c)));
    if (sweep.per_cut.back().achieved_p > sweep.per_cut[sweep.best].achieved_p) sweep.best = c;
  }
  return sweep;
}

}  // namespace ameqbc

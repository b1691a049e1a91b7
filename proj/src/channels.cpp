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

#include "ameqbc/channels.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ameqbc {

namespace {

std::vector<int> all_factors(const RegisterShape& shape) {
  std::vector<int> f(static_cast<std::size_t>(shape.num_factors()));
  std::iota(f.begin(), f.end(), 0);
  return f;
}

double tp_error(const std::vector<Operator>& ops, Index dim) {
  Operator acc = Operator::Zero(dim, dim);
  for (const auto& k : ops) acc.noalias() += k.adjoint() * k;
  return max_abs_diff(acc, Operator::Identity(dim, dim));
}

}  // namespace

KrausChannel::KrausChannel(RegisterShape shape, std::vector<int> support,
                           std::vector<Operator> kraus_ops)
    : shape_(std::move(shape)), support_(std::move(support)), ops_(std::move(kraus_ops)) {
  if (support_.empty()) throw QbcError("KrausChannel: empty support");
  std::vector<int> sorted = support_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw QbcError("KrausChannel: repeated support factor");
  }
  const Index ds = shape_.subshape(support_).total_dim();
  if (ops_.empty()) throw QbcError("KrausChannel: no Kraus operators");
  for (const auto& k : ops_) {
    if (k.rows() != ds || k.cols() != ds) throw QbcError("KrausChannel: operator size mismatch");
  }
  if (tp_error(ops_, ds) > tol::kStructural) {
    throw QbcError("KrausChannel: Kraus set is not trace preserving");
  }
}

KrausChannel KrausChannel::full(RegisterShape shape, std::vector<Operator> kraus_ops) {
  auto support = all_factors(shape);
  return KrausChannel(std::move(shape), std::move(support), std::move(kraus_ops));
}

KrausChannel KrausChannel::identity(RegisterShape shape) {
  const Index dim = shape.total_dim();
  return full(std::move(shape), {Operator::Identity(dim, dim)});
}

double KrausChannel::trace_preservation_error() const {
  return tp_error(ops_, ops_.front().rows());
}

Operator KrausChannel::full_kraus(std::size_t j) const {
  return embed_local(shape_, support_, ops_.at(j));
}

Operator KrausChannel::support_superoperator() const {
  const Index ds = ops_.front().rows();
  Operator lam = Operator::Zero(ds * ds, ds * ds);
  for (const auto& k : ops_) lam += Eigen::kroneckerProduct(k, k.conjugate()).eval();
  return lam;
}

Operator KrausChannel::apply(const Operator& x) const {
  const Index dim = shape_.total_dim();
  if (x.rows() != dim || x.cols() != dim) throw QbcError("KrausChannel::apply: shape mismatch");
  const Index ds = ops_.front().rows();
  const Index rest = dim / ds;
  const auto n_ops = static_cast<Index>(ops_.size());

  // Block form costs ds^2 dim^2; per-operator form costs 2 n_ops ds dim^2.
  if (ds < 2 * n_ops) {
    std::vector<int> order = support_;
    for (int f = 0; f < shape_.num_factors(); ++f) {
      if (std::find(support_.begin(), support_.end(), f) == support_.end()) order.push_back(f);
    }
    const auto perm = FactorPermutation::from_order(order);
    const Operator moved = permute_factors(shape_, x, perm);
    const Operator lam = support_superoperator();
    Operator out = Operator::Zero(dim, dim);
    for (Index b = 0; b < ds; ++b) {
      for (Index bp = 0; bp < ds; ++bp) {
        auto target = out.block(b * rest, bp * rest, rest, rest);
        for (Index a = 0; a < ds; ++a) {
          for (Index ap = 0; ap < ds; ++ap) {
            const Complex w = lam(b * ds + bp, a * ds + ap);
            if (std::abs(w) < 1e-300) continue;
            target.noalias() += w * moved.block(a * rest, ap * rest, rest, rest);
          }
        }
      }
    }
    return permute_factors(shape_, out, perm.inverse());
  }

  Operator out = Operator::Zero(dim, dim);
  for (const auto& k : ops_) {
    const Operator kx = apply_local_left(shape_, support_, k, x);
    out += apply_local_left(shape_, support_, k, kx.adjoint()).adjoint();
  }
  return out;
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  if (!(rho.shape() == shape_)) throw QbcError("KrausChannel::apply: shape mismatch");
  Operator out = apply(rho.entries());
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(shape_, std::move(out));
}

SeparableChannel::SeparableChannel(Bipartition cut, std::vector<FactorPair> factor_pairs)
    : cut_(std::move(cut)), pairs_(std::move(factor_pairs)) {
  if (pairs_.empty()) throw QbcError("SeparableChannel: no Kraus pairs");
  const Index n1 = cut_.dim_one();
  const Index n2 = cut_.dim_two();
  for (const auto& [k1, k2] : pairs_) {
    if (k1.rows() != n1 || k1.cols() != n1 || k2.rows() != n2 || k2.cols() != n2) {
      throw QbcError("SeparableChannel: factor size does not match cut");
    }
  }
  // Trace preservation is invariant under the reordering P, so it is checked
  // on (side one, side two) order directly.
  std::vector<Operator> products;
  products.reserve(pairs_.size());
  for (const auto& [k1, k2] : pairs_) products.push_back(tensor(k1, k2));
  if (tp_error(products, n1 * n2) > tol::kStructural) {
    throw QbcError("SeparableChannel: lifted Kraus set is not trace preserving");
  }
}

SeparableChannel SeparableChannel::from_isometries(Bipartition cut, const Operator& v1,
                                                   int rank_one, const Operator& v2,
                                                   int rank_two) {
  const Index n1 = cut.dim_one();
  const Index n2 = cut.dim_two();
  if (rank_one < 1 || rank_two < 1) throw QbcError("from_isometries: rank must be >= 1");
  if (v1.rows() != n1 * rank_one || v1.cols() != n1 || v2.rows() != n2 * rank_two ||
      v2.cols() != n2) {
    throw QbcError("from_isometries: isometry shape does not match cut and rank");
  }
  auto slice = [](const Operator& v, Index n, int rank, int e) {
    Operator k(n, n);
    for (Index r = 0; r < n; ++r) k.row(r) = v.row(r * rank + e);
    return k;
  };
  std::vector<FactorPair> pairs;
  for (int e1 = 0; e1 < rank_one; ++e1) {
    const Operator k1 = slice(v1, n1, rank_one, e1);
    for (int e2 = 0; e2 < rank_two; ++e2) pairs.emplace_back(k1, slice(v2, n2, rank_two, e2));
  }
  return SeparableChannel(std::move(cut), std::move(pairs));
}

std::vector<Operator> SeparableChannel::lifted_kraus() const {
  const Operator p = factor_permutation_operator(cut_.shape(), cut_.to_cut_order());
  std::vector<Operator> out;
  out.reserve(pairs_.size());
  for (const auto& [k1, k2] : pairs_) out.push_back(p.adjoint() * tensor(k1, k2) * p);
  return out;
}

KrausChannel SeparableChannel::to_kraus_channel() const {
  return KrausChannel::full(cut_.shape(), lifted_kraus());
}

KrausChannel lift_to_alice(const SeparableChannel& channel, const RegisterShape& bob) {
  const RegisterShape& alice = channel.cut().shape();
  const RegisterShape joint = alice.concat(bob);
  std::vector<int> support(static_cast<std::size_t>(alice.num_factors()));
  std::iota(support.begin(), support.end(), 0);
  return KrausChannel(joint, std::move(support), channel.lifted_kraus());
}

KrausChannel lift_to_alice(const SeparableChannel& channel, const ProtocolParams& params) {
  if (!(channel.cut().shape() == params.alice_shape())) {
    throw QbcError("lift_to_alice: cut must partition exactly Alice's three qudits");
  }
  return lift_to_alice(channel, RegisterShape({params.d()}));
}

SeparableChannel random_separable_channel(const Bipartition& cut, KrausRank rank, Rng& rng) {
  if (rank.side_one < 1 || rank.side_two < 1) throw QbcError("kraus rank must be >= 1");
  const Index n1 = cut.dim_one();
  const Index n2 = cut.dim_two();
  const Operator v1 = haar_isometry(n1 * rank.side_one, n1, rng);
  const Operator v2 = haar_isometry(n2 * rank.side_two, n2, rng);
  return SeparableChannel::from_isometries(cut, v1, rank.side_one, v2, rank.side_two);
}

KrausChannel measurement_channel(int b, const Permutation& pi, int d) {
  if (pi.size() != d) throw QbcError("measurement_channel: permutation size mismatch");
  std::vector<Operator> ops;
  for (int m = 0; m < d; ++m) {
    const StateVector beta = commit_basis_vector(b, pi, m);
    Operator k = Operator::Zero(d, d);
    k.row(m) = beta.amplitudes().adjoint();
    ops.push_back(std::move(k));
  }
  return KrausChannel(RegisterShape::uniform(d, 5), {kAncFactor}, std::move(ops));
}

KrausChannel averaged_measurement_channel(int b, int d, AveragingMode mode,
                                          const AveragingOptions& options) {
  if (b != 0 && b != 1) throw QbcError("bit must be 0 or 1");
  if (d < 2) throw QbcError("d must be >= 2");
  const RegisterShape shape = RegisterShape::uniform(d, 5);
  std::vector<Operator> ops;
  auto add_average = [&](const std::vector<Permutation>& perms) {
    const double w = 1.0 / std::sqrt(static_cast<double>(perms.size()));
    for (const auto& pi : perms) {
      const KrausChannel single = measurement_channel(b, pi, d);
      for (const auto& k : single.kraus_ops()) ops.push_back(w * k);
    }
  };
  switch (mode) {
    case AveragingMode::Exact:
      if (d > 5) {
        throw QbcError("exact permutation averaging needs d <= 5; use sampled mode");
      }
      add_average(Permutation::all(d));
      break;
    case AveragingMode::Sampled: {
      if (options.sample_count < 1) throw QbcError("sample_count must be >= 1");
      Rng rng(options.seed);
      std::vector<Permutation> perms;
      for (int s = 0; s < options.sample_count; ++s) perms.push_back(Permutation::random(d, rng));
      add_average(perms);
      break;
    }
    case AveragingMode::ClosedForm: {
      const double w = 1.0 / std::sqrt(static_cast<double>(d));
      for (int m = 0; m < d; ++m) {
        for (int k = 0; k < d; ++k) {
          Operator op = Operator::Zero(d, d);
          op(m, k) = w;
          ops.push_back(std::move(op));
        }
      }
      break;
    }
  }
  return KrausChannel(shape, {kAncFactor}, std::move(ops));
}

KrausChannel depolarizing_channel(const RegisterShape& shape) {
  const Index dim = shape.total_dim();
  const double w = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Operator> ops;
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      Operator k = Operator::Zero(dim, dim);
      k(i, j) = w;
      ops.push_back(std::move(k));
    }
  }
  return KrausChannel::full(shape, std::move(ops));
}

}  // namespace ameqbc

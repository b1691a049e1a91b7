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

#include "ameqbc/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ameqbc {

std::string to_string(Direction dir) { return dir == Direction::ZeroToOne ? "0to1" : "1to0"; }

Direction parse_direction(const std::string& text) {
  if (text == "0to1") return Direction::ZeroToOne;
  if (text == "1to0") return Direction::OneToZero;
  throw QbcError("direction must be 0to1 or 1to0, got '" + text + "'");
}

double AttackInstance::lambda_max() const {
  return lambdas.empty() ? 0.0 : *std::max_element(lambdas.begin(), lambdas.end());
}

const std::vector<StateVector>& AttackInstance::source() const {
  return direction == Direction::ZeroToOne ? x_family : y_family;
}

const std::vector<StateVector>& AttackInstance::target() const {
  return direction == Direction::ZeroToOne ? y_family : x_family;
}

AttackInstance AttackInstance::with_direction(Direction dir) const {
  AttackInstance copy = *this;
  copy.direction = dir;
  return copy;
}

AttackInstance AttackInstance::with_cut(const Bipartition& new_cut) const {
  if (!(new_cut.shape() == cut.shape())) throw QbcError("with_cut: register mismatch");
  AttackInstance copy = *this;
  copy.cut = new_cut;
  return copy;
}

void AttackInstance::validate() const {
  const std::size_t m = lambdas.size();
  if (m == 0 || x_family.size() != m || y_family.size() != m) {
    throw QbcError("AttackInstance: family sizes do not match lambdas");
  }
  double total = 0.0;
  for (double l : lambdas) {
    if (l < -tol::kStructural) throw QbcError("AttackInstance: negative Schmidt weight");
    total += l;
  }
  if (std::abs(total - 1.0) > tol::kStructural) throw QbcError("AttackInstance: weights must sum to 1");
  for (const auto* fam : {&x_family, &y_family}) {
    for (const auto& v : *fam) {
      if (!(v.shape() == alice_shape())) throw QbcError("AttackInstance: vector not on Alice's register");
    }
    const Operator g = gram_matrix(*fam);
    if (max_abs_diff(g, Operator::Identity(g.rows(), g.cols())) > tol::kStructural) {
      throw QbcError("AttackInstance: family is not orthonormal");
    }
  }
}

AttackInstance protocol_instance(const ProtocolParams& params, const Permutation& pi, int m,
                                 const Bipartition& cut, Direction dir) {
  if (!(cut.shape() == params.alice_shape())) {
    throw QbcError("protocol_instance: cut must partition Alice's three qudits");
  }
  AttackInstance inst{std::vector<double>(static_cast<std::size_t>(params.d()), 1.0 / params.d()),
                      alice_family(params, 0, pi, m), alice_family(params, 1, pi, m), cut, dir};
  inst.validate();
  return inst;
}

double switch_probability(const AttackInstance& instance, const KrausChannel& channel) {
  if (!(channel.shape() == instance.alice_shape())) {
    throw QbcError("switch_probability: channel does not act on Alice's register");
  }
  const auto& src = instance.source();
  const auto& tgt = instance.target();
  double total = 0.0;
  for (std::size_t j = 0; j < channel.size(); ++j) {
    const Operator k = channel.full_kraus(j);
    Complex amp = 0.0;
    for (std::size_t i = 0; i < instance.terms(); ++i) {
      amp += instance.lambdas[i] * tgt[i].amplitudes().dot(k * src[i].amplitudes());
    }
    total += std::norm(amp);
  }
  return total;
}

namespace {

// Family vectors reshaped to N1 x N2 matrices in (side one, side two) order.
std::vector<Operator> cut_matrices(const std::vector<StateVector>& family, const Bipartition& cut) {
  const auto perm = cut.to_cut_order();
  std::vector<Operator> out;
  out.reserve(family.size());
  for (const auto& v : family) {
    const Amplitudes moved = permute_factors(cut.shape(), v.amplitudes(), perm);
    out.push_back(Eigen::Map<const Operator>(moved.data(), cut.dim_two(), cut.dim_one()).transpose());
  }
  return out;
}

}  // namespace

double switch_probability(const AttackInstance& instance, const SeparableChannel& channel) {
  const Bipartition& cut = channel.cut();
  if (!(cut.shape() == instance.alice_shape())) {
    throw QbcError("switch_probability: channel does not act on Alice's register");
  }
  const auto src = cut_matrices(instance.source(), cut);
  const auto tgt = cut_matrices(instance.target(), cut);
  double total = 0.0;
  for (const auto& [k1, k2] : channel.factor_pairs()) {
    Complex amp = 0.0;
    for (std::size_t i = 0; i < instance.terms(); ++i) {
      // (K1 (x) K2) vec(S) = vec(K1 S K2^T) in row-major vectorization.
      const Operator moved = k1 * src[i] * k2.transpose();
      amp += instance.lambdas[i] * (tgt[i].conjugate().cwiseProduct(moved)).sum();
    }
    total += std::norm(amp);
  }
  return total;
}

double switch_probability_via_fidelity(const AttackInstance& instance,
                                       const KrausChannel& channel) {
  if (!(channel.shape() == instance.alice_shape())) {
    throw QbcError("switch_probability_via_fidelity: channel does not act on Alice's register");
  }
  const RegisterShape& alice = instance.alice_shape();
  const int bob_dim = std::max<int>(2, static_cast<int>(instance.terms()));
  const RegisterShape joint = alice.concat(RegisterShape({bob_dim}));
  auto purification = [&](const std::vector<StateVector>& family) {
    Amplitudes v = Amplitudes::Zero(joint.total_dim());
    for (std::size_t i = 0; i < instance.terms(); ++i) {
      for (Index a = 0; a < alice.total_dim(); ++a) {
        v(a * bob_dim + static_cast<Index>(i)) += std::sqrt(instance.lambdas[i]) * family[i][a];
      }
    }
    return StateVector::normalized(joint, std::move(v));
  };
  std::vector<int> support(static_cast<std::size_t>(alice.num_factors()));
  std::iota(support.begin(), support.end(), 0);
  std::vector<Operator> full;
  for (std::size_t j = 0; j < channel.size(); ++j) full.push_back(channel.full_kraus(j));
  const KrausChannel lifted(joint, std::move(support), std::move(full));
  const DensityMatrix evolved = lifted.apply(DensityMatrix::pure(purification(instance.source())));
  return fidelity(DensityMatrix::pure(purification(instance.target())), evolved);
}

SwitchBounds switch_bounds(double lambda_max, Index n2) {
  if (n2 < 1) throw QbcError("switch_bounds: N2 must be >= 1");
  const auto n = static_cast<double>(n2);
  return {lambda_max * lambda_max * n, 1.0 / n};
}

SwitchBounds analytic_bounds(const AttackInstance& instance) {
  return switch_bounds(instance.lambda_max(), instance.cut.dim_two());
}

double direction_bound(const AttackInstance& instance, const Bipartition& cut) {
  const auto b = switch_bounds(instance.lambda_max(), cut.dim_two());
  return instance.direction == Direction::ZeroToOne ? b.p0 : b.p1;
}

double lemma_cheat_bound(int n, int d) {
  if (n < 2) throw QbcError("lemma_cheat_bound: n must be >= 2");
  if (d < 2) throw QbcError("lemma_cheat_bound: d must be >= 2");
  const double total = std::pow(static_cast<double>(d), n);
  double best = 0.0;
  double n2 = 1.0;
  for (int k = 1; k <= n / 2; ++k) {
    n2 *= d;
    double inner = 1.0;
    for (double m = 1.0; m <= total; m += 1.0) {
      const double lam = 1.0 / m;
      inner = std::min(inner, std::max(1.0 / n2, lam * lam * n2));
    }
    best = std::max(best, inner);
  }
  return best;
}

namespace {

Operator family_matrix(const std::vector<StateVector>& family) {
  Operator m(family.front().amplitudes().size(), static_cast<Index>(family.size()));
  for (std::size_t i = 0; i < family.size(); ++i) m.col(static_cast<Index>(i)) = family[i].amplitudes();
  return m;
}

// Unitary whose first columns are the orthonormal columns of `cols`.
Operator complete_to_unitary(const Operator& cols) {
  const Index n = cols.rows();
  const Index m = cols.cols();
  Eigen::HouseholderQR<Operator> qr(cols);
  const Operator q = qr.householderQ();
  Operator out(n, n);
  out.leftCols(m) = cols;
  out.rightCols(n - m) = q.rightCols(n - m);
  return out;
}

}  // namespace

UnrestrictedAttack unrestricted_attack(const AttackInstance& instance) {
  const Operator s = family_matrix(instance.source());
  const Operator t = family_matrix(instance.target());
  if (s.cols() != t.cols()) throw QbcError("unrestricted_attack: family sizes differ");
  const Operator id = Operator::Identity(s.cols(), s.cols());
  if (max_abs_diff(s.adjoint() * s, id) > tol::kStructural ||
      max_abs_diff(t.adjoint() * t, id) > tol::kStructural) {
    throw QbcError("unrestricted_attack: families must be orthonormal");
  }
  Operator u = complete_to_unitary(t) * complete_to_unitary(s).adjoint();
  const KrausChannel channel = KrausChannel::full(instance.alice_shape(), {u});
  const double p = switch_probability(instance, channel);
  return {std::move(u), p};
}

AttackInstance random_instance(std::size_t terms, const Bipartition& cut, Rng& rng,
                               Direction dir) {
  const Index n1 = cut.dim_one();
  const Index n2 = cut.dim_two();
  if (terms < 1 || static_cast<Index>(terms) > n2) {
    throw QbcError("random_instance: need 1 <= M <= N2 Schmidt terms");
  }
  const RegisterShape cut_shape = permuted_shape(cut.shape(), cut.to_cut_order());
  const FactorPermutation back = cut.to_cut_order().inverse();

  // Distinct Bell labels (a, b) drawn without replacement from N2^2.
  std::vector<Index> labels(static_cast<std::size_t>(n2 * n2));
  std::iota(labels.begin(), labels.end(), 0);
  for (std::size_t i = 0; i < terms; ++i) {
    const auto j = i + static_cast<std::size_t>(rng() % (labels.size() - i));
    std::swap(labels[i], labels[j]);
  }

  const Operator u = haar_unitary(n1, rng);
  const Operator v = haar_unitary(n2, rng);
  const Operator local = tensor(u, v);
  const Operator a_basis = haar_unitary(n1, rng);
  const Operator b_basis = haar_unitary(n2, rng);

  AttackInstance inst{dirichlet_uniform(terms, rng), {}, {}, cut, dir};
  const double norm = 1.0 / std::sqrt(static_cast<double>(n2));
  for (std::size_t i = 0; i < terms; ++i) {
    const Index phase = labels[i] / n2;
    const Index shift = labels[i] % n2;
    Amplitudes bell = Amplitudes::Zero(n1 * n2);
    for (Index k = 0; k < n2; ++k) {
      const double angle = 2.0 * std::acos(-1.0) * static_cast<double>((phase * k) % n2) / n2;
      bell(k * n2 + (k + shift) % n2) = norm * std::polar(1.0, angle);
    }
    const Amplitudes x_cut = local * bell;
    const Amplitudes y_cut = tensor(Operator(a_basis.col(static_cast<Index>(i))),
                                    Operator(b_basis.col(static_cast<Index>(i))));
    inst.x_family.push_back(
        StateVector::normalized(cut.shape(), permute_factors(cut_shape, x_cut, back)));
    inst.y_family.push_back(
        StateVector::normalized(cut.shape(), permute_factors(cut_shape, y_cut, back)));
  }
  inst.validate();
  return inst;
}

}  // namespace ameqbc

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

#include "ameqbc/protocol.hpp"

#include <algorithm>
#include <cmath>

namespace ameqbc {

namespace {

void check_bit(int b) {
  if (b != 0 && b != 1) throw QbcError("bit must be 0 or 1");
}

void check_perm(const ProtocolParams& params, const Permutation& pi) {
  if (pi.size() != params.d()) throw QbcError("permutation size does not match d");
}

void check_outcome(const ProtocolParams& params, int m) {
  if (m < 0 || m >= params.d()) throw QbcError("outcome out of range");
}

Index ghz_index(int d, int a, int bob) { return ((static_cast<Index>(a) * d + a) * d + a) * d + bob; }

}  // namespace

ProtocolParams::ProtocolParams(int d) : d_(d) {
  if (d < 2) throw QbcError("ProtocolParams: d must be >= 2");
}

Bipartition ProtocolParams::alice_bob_cut() const {
  return Bipartition(shared_shape(), {0, 1, 2});
}

StateVector phi_state(int l, int d) {
  if (d < 2) throw QbcError("phi_state: d must be >= 2");
  if (l < 0 || l >= d) throw QbcError("phi_state: l out of range");
  const RegisterShape shape = RegisterShape::uniform(d, 4);
  Amplitudes v = Amplitudes::Zero(shape.total_dim());
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    v(ghz_index(d, j, (j + l) % d)) = norm * root_of_unity(d, static_cast<long long>(j) * l);
  }
  return StateVector(shape, std::move(v));
}

StateVector xi_state(int d) {
  if (d < 2) throw QbcError("xi_state: d must be >= 2");
  const RegisterShape shape = RegisterShape::uniform(d, 5);
  const Index block = shape.stride(kAncFactor);
  Amplitudes v = Amplitudes::Zero(shape.total_dim());
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int l = 0; l < d; ++l) v.segment(l * block, block) = norm * phi_state(l, d).amplitudes();
  return StateVector(shape, std::move(v));
}

StateVector commit_basis_vector(int b, const Permutation& pi, int k) {
  check_bit(b);
  return basis_vector(b == 0 ? BasisKind::X : BasisKind::Z, k, pi.size(), pi);
}

MeasurementBranch commit_branch(const ProtocolParams& params, int b, const Permutation& pi, int m) {
  check_bit(b);
  check_perm(params, pi);
  check_outcome(params, m);
  const int d = params.d();
  const StateVector xi = xi_state(d);
  const StateVector beta = commit_basis_vector(b, pi, m);
  const Index block = xi.shape().stride(kAncFactor);
  // (<beta| x 1) |Xi>; the anc is left in |m> and dropped.
  Amplitudes rest = Amplitudes::Zero(block);
  for (int a = 0; a < d; ++a) {
    rest += std::conj(beta[a]) * xi.amplitudes().segment(a * block, block);
  }
  const double p = rest.squaredNorm();
  return {p, StateVector::normalized(params.shared_shape(), std::move(rest))};
}

CommitmentRecord commit(const ProtocolParams& params, int b, const Permutation& pi, Rng& rng) {
  std::vector<MeasurementBranch> branches;
  branches.reserve(static_cast<std::size_t>(params.d()));
  for (int m = 0; m < params.d(); ++m) branches.push_back(commit_branch(params, b, pi, m));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = u(rng);
  double acc = 0.0;
  int m = params.d() - 1;
  for (int k = 0; k < params.d(); ++k) {
    acc += branches[static_cast<std::size_t>(k)].probability;
    if (r < acc) {
      m = k;
      break;
    }
  }
  return {b, pi, m, branches[static_cast<std::size_t>(m)].shared_state};
}

StateVector post_state_closed_form(const ProtocolParams& params, int b, const Permutation& pi,
                                   int m) {
  check_bit(b);
  check_perm(params, pi);
  check_outcome(params, m);
  const int d = params.d();
  const int p = pi(m);
  if (b == 1) return phi_state(p, d);
  Amplitudes v = Amplitudes::Zero(params.shared_shape().total_dim());
  for (int l = 0; l < d; ++l) {
    v += root_of_unity(d, static_cast<long long>(p) * l) * phi_state(l, d).amplitudes();
  }
  v /= std::sqrt(static_cast<double>(d));
  return StateVector(params.shared_shape(), std::move(v));
}

double open_verify(const CommitmentRecord& record, int claimed_b, const Permutation& claimed_pi,
                   const DensityMatrix& state) {
  const ProtocolParams params(record.pi.size());
  if (!(state.shape() == params.shared_shape())) throw QbcError("open_verify: shape mismatch");
  const StateVector expected = post_state_closed_form(params, claimed_b, claimed_pi, record.m);
  const Complex p = expected.amplitudes().dot(state.entries() * expected.amplitudes());
  return std::clamp(p.real(), 0.0, 1.0);
}

bool open_verify_sample(const CommitmentRecord& record, int claimed_b,
                        const Permutation& claimed_pi, const DensityMatrix& state, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return u(rng) < open_verify(record, claimed_b, claimed_pi, state);
}

std::vector<StateVector> alice_family(const ProtocolParams& params, int b, const Permutation& pi,
                                      int m) {
  const int d = params.d();
  const StateVector xi = post_state_closed_form(params, b, pi, m);
  const Index alice_dim = params.alice_shape().total_dim();
  const double scale = std::sqrt(static_cast<double>(d));
  std::vector<StateVector> family;
  for (int j = 0; j < d; ++j) {
    Amplitudes v(alice_dim);
    for (Index a = 0; a < alice_dim; ++a) v(a) = scale * xi[a * d + j];
    family.emplace_back(params.alice_shape(), std::move(v));
  }
  return family;
}

std::vector<StateVector> alice_family_closed_form(const ProtocolParams& params, int b,
                                                  const Permutation& pi, int m) {
  check_bit(b);
  check_perm(params, pi);
  check_outcome(params, m);
  const int d = params.d();
  const long long p = pi(m);
  const RegisterShape shape = params.alice_shape();
  auto diag = [d](long long a) {
    const Index c = ((a % d) + d) % d;
    return (c * d + c) * d + c;
  };
  std::vector<StateVector> family;
  for (long long j = 0; j < d; ++j) {
    Amplitudes v = Amplitudes::Zero(shape.total_dim());
    if (b == 1) {
      v(diag(j - p)) = root_of_unity(d, (j - p) * p);
    } else {
      const double norm = 1.0 / std::sqrt(static_cast<double>(d));
      for (long long l = 0; l < d; ++l) v(diag(j - l)) += norm * root_of_unity(d, p * l + (j - l) * l);
    }
    family.emplace_back(shape, std::move(v));
  }
  return family;
}

SchmidtData schmidt_family(const ProtocolParams& params, int b, const Permutation& pi, int m) {
  SchmidtData out;
  const int d = params.d();
  out.left_vectors = alice_family(params, b, pi, m);
  for (int j = 0; j < d; ++j) {
    out.coefficients.push_back(1.0 / d);
    out.right_vectors.push_back(StateVector::basis(RegisterShape({d}), j));
  }
  out.lambda_max = 1.0 / d;
  return out;
}

}  // namespace ameqbc

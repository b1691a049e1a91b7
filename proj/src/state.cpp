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

#include "ameqbc/state.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <optional>

namespace ameqbc {

StateVector::StateVector(RegisterShape shape, Amplitudes amplitudes)
    : shape_(std::move(shape)), amps_(std::move(amplitudes)) {
  if (amps_.size() != shape_.total_dim()) throw QbcError("StateVector: length mismatch");
  if (std::abs(amps_.squaredNorm() - 1.0) > tol::kStructural) {
    throw QbcError("StateVector: not normalized");
  }
}

StateVector StateVector::normalized(RegisterShape shape, Amplitudes amplitudes) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw QbcError("StateVector: zero vector");
  amplitudes /= n;
  return StateVector(std::move(shape), std::move(amplitudes));
}

StateVector StateVector::basis(RegisterShape shape, Index index) {
  if (index < 0 || index >= shape.total_dim()) throw QbcError("basis: index out of range");
  Amplitudes v = Amplitudes::Zero(shape.total_dim());
  v(index) = 1.0;
  return StateVector(std::move(shape), std::move(v));
}

Complex StateVector::inner(const StateVector& other) const {
  if (!(shape_ == other.shape_)) throw QbcError("inner: shape mismatch");
  return amps_.dot(other.amps_);
}

DensityMatrix::DensityMatrix(RegisterShape shape, Operator entries)
    : shape_(std::move(shape)), rho_(std::move(entries)) {
  const Index dim = shape_.total_dim();
  if (rho_.rows() != dim || rho_.cols() != dim) throw QbcError("DensityMatrix: size mismatch");
  if (max_abs_diff(rho_, rho_.adjoint()) > tol::kStructural) {
    throw QbcError("DensityMatrix: not Hermitian");
  }
  if (std::abs(rho_.trace() - 1.0) > tol::kStructural) {
    throw QbcError("DensityMatrix: trace is not 1");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.shape(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(RegisterShape shape) {
  const Index dim = shape.total_dim();
  Operator id = Operator::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(std::move(shape), std::move(id));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Operator> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double DensityMatrix::max_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Operator> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

bool DensityMatrix::is_valid(double tol) const {
  if (max_abs_diff(rho_, rho_.adjoint()) > tol) return false;
  if (std::abs(rho_.trace() - 1.0) > tol) return false;
  return min_eigenvalue() >= -tol;
}

Operator tensor(const Operator& a, const Operator& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Amplitudes v = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
  return StateVector(a.shape().concat(b.shape()), std::move(v));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.shape().concat(b.shape()), tensor(a.entries(), b.entries()));
}

namespace {

struct KeepLayout {
  FactorPermutation perm;
  RegisterShape kept;
  Index kept_dim;
  Index rest_dim;
};

KeepLayout keep_layout(const RegisterShape& shape, std::vector<int>& keep) {
  if (keep.empty()) throw QbcError("partial_trace: empty keep set");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw QbcError("partial_trace: repeated factor");
  }
  for (int f : keep) {
    if (f < 0 || f >= shape.num_factors()) throw QbcError("partial_trace: factor out of range");
  }
  std::vector<int> order = keep;
  for (int f = 0; f < shape.num_factors(); ++f) {
    if (!std::binary_search(keep.begin(), keep.end(), f)) order.push_back(f);
  }
  RegisterShape kept = shape.subshape(keep);
  const Index kept_dim = kept.total_dim();
  return {FactorPermutation::from_order(std::move(order)), std::move(kept), kept_dim,
          shape.total_dim() / kept_dim};
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const auto layout = keep_layout(rho.shape(), keep);
  if (layout.rest_dim == 1) return rho;
  const auto src = permutation_source_indices(rho.shape(), layout.perm);
  const Index k = layout.kept_dim;
  const Index r = layout.rest_dim;
  Operator out = Operator::Zero(k, k);
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < k; ++i) {
      Complex acc = 0.0;
      for (Index t = 0; t < r; ++t) {
        acc += rho.entries()(src[static_cast<std::size_t>(i * r + t)],
                             src[static_cast<std::size_t>(j * r + t)]);
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(layout.kept, std::move(out));
}

DensityMatrix partial_trace(const StateVector& psi, std::vector<int> keep) {
  const auto layout = keep_layout(psi.shape(), keep);
  const Amplitudes moved = permute_factors(psi.shape(), psi.amplitudes(), layout.perm);
  // Row-major (kept, rest) reshape == column-major (rest, kept) map.
  Eigen::Map<const Operator> m(moved.data(), layout.rest_dim, layout.kept_dim);
  Operator out = (m.transpose() * m.conjugate()).eval();
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(layout.kept, std::move(out));
}

namespace {

// Returns the dominant eigenvector when rho is pure to working precision.
std::optional<Amplitudes> pure_vector(const Operator& rho) {
  Eigen::SelfAdjointEigenSolver<Operator> es(rho);
  const Index top = rho.rows() - 1;
  if (es.eigenvalues()(top) < 1.0 - 1e-12) return std::nullopt;
  return Amplitudes(es.eigenvectors().col(top));
}

Operator psd_sqrt(const Operator& m) {
  Eigen::SelfAdjointEigenSolver<Operator> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!(rho.shape() == sigma.shape())) throw QbcError("fidelity: shape mismatch");
  // For a pure argument F reduces to an expectation value, which avoids the
  // square roots of rounding-level eigenvalues.
  if (auto v = pure_vector(sigma.entries())) {
    return std::clamp((v->adjoint() * rho.entries() * *v)(0, 0).real(), 0.0, 1.0);
  }
  if (auto v = pure_vector(rho.entries())) {
    return std::clamp((v->adjoint() * sigma.entries() * *v)(0, 0).real(), 0.0, 1.0);
  }
  const Operator root = psd_sqrt(sigma.entries());
  Operator inner = root * rho.entries() * root;
  inner = (0.5 * (inner + inner.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Operator> es(inner, Eigen::EigenvaluesOnly);
  const double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(tr * tr, 0.0, 1.0);
}

double fidelity(const StateVector& psi, const StateVector& phi) {
  return std::norm(psi.inner(phi));
}

Operator apply_local_left(const RegisterShape& shape, const std::vector<int>& support,
                          const Operator& op, const Operator& columns) {
  const Index dim = shape.total_dim();
  if (columns.rows() != dim) throw QbcError("apply_local_left: row count mismatch");
  const Index ds = shape.subshape(support).total_dim();
  if (op.rows() != ds || op.cols() != ds) throw QbcError("apply_local_left: operator size");
  std::vector<int> order = support;
  for (int f = 0; f < shape.num_factors(); ++f) {
    if (std::find(support.begin(), support.end(), f) == support.end()) order.push_back(f);
  }
  const auto perm = FactorPermutation::from_order(order);
  const auto src = permutation_source_indices(shape, perm);
  const Index rest = dim / ds;
  Operator moved(dim, columns.cols());
  for (Index n = 0; n < dim; ++n) moved.row(n) = columns.row(src[static_cast<std::size_t>(n)]);
  Operator result = Operator::Zero(dim, columns.cols());
  for (Index b = 0; b < ds; ++b) {
    for (Index a = 0; a < ds; ++a) {
      const Complex w = op(b, a);
      if (w == Complex(0.0)) continue;
      result.middleRows(b * rest, rest).noalias() += w * moved.middleRows(a * rest, rest);
    }
  }
  Operator out(dim, columns.cols());
  for (Index n = 0; n < dim; ++n) out.row(src[static_cast<std::size_t>(n)]) = result.row(n);
  return out;
}

Operator embed_local(const RegisterShape& shape, const std::vector<int>& support,
                     const Operator& op) {
  const Index dim = shape.total_dim();
  return apply_local_left(shape, support, op, Operator::Identity(dim, dim));
}

}  // namespace ameqbc

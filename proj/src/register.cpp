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

#include "ameqbc/register.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ameqbc {

RegisterShape::RegisterShape(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.empty()) throw QbcError("RegisterShape: no factors");
  strides_.assign(dims_.size(), 1);
  for (int k = static_cast<int>(dims_.size()) - 1; k >= 0; --k) {
    const int d = dims_[static_cast<std::size_t>(k)];
    if (d < 2) throw QbcError("RegisterShape: factor dimension must be >= 2");
    strides_[static_cast<std::size_t>(k)] = total_;
    total_ *= d;
  }
}

RegisterShape RegisterShape::uniform(int d, int count) {
  return RegisterShape(std::vector<int>(static_cast<std::size_t>(count), d));
}

RegisterShape RegisterShape::subshape(std::span<const int> factors) const {
  std::vector<int> dims;
  dims.reserve(factors.size());
  for (int f : factors) {
    if (f < 0 || f >= num_factors()) throw QbcError("subshape: factor index out of range");
    dims.push_back(dims_[static_cast<std::size_t>(f)]);
  }
  return RegisterShape(std::move(dims));
}

RegisterShape RegisterShape::concat(const RegisterShape& tail) const {
  std::vector<int> dims = dims_;
  dims.insert(dims.end(), tail.dims_.begin(), tail.dims_.end());
  return RegisterShape(std::move(dims));
}

namespace {

bool is_bijection(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 0 || x >= static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)]) {
      return false;
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

FactorPermutation::FactorPermutation(std::vector<int> targets) : targets_(std::move(targets)) {
  if (!is_bijection(targets_)) throw QbcError("FactorPermutation: not a bijection");
}

FactorPermutation FactorPermutation::from_order(std::vector<int> order) {
  if (!is_bijection(order)) throw QbcError("FactorPermutation: order is not a bijection");
  std::vector<int> targets(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    targets[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  }
  return FactorPermutation(std::move(targets));
}

FactorPermutation FactorPermutation::identity(int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  std::iota(t.begin(), t.end(), 0);
  return FactorPermutation(std::move(t));
}

std::vector<int> FactorPermutation::order() const {
  std::vector<int> order(targets_.size());
  for (std::size_t j = 0; j < targets_.size(); ++j) {
    order[static_cast<std::size_t>(targets_[j])] = static_cast<int>(j);
  }
  return order;
}

FactorPermutation FactorPermutation::inverse() const { return FactorPermutation(order()); }

RegisterShape permuted_shape(const RegisterShape& shape, const FactorPermutation& perm) {
  const auto order = perm.order();
  return shape.subshape(order);
}

std::vector<Index> permutation_source_indices(const RegisterShape& shape,
                                              const FactorPermutation& perm) {
  if (perm.size() != shape.num_factors()) {
    throw QbcError("factor permutation size does not match register");
  }
  const auto order = perm.order();
  const int n = shape.num_factors();
  const Index total = shape.total_dim();
  std::vector<Index> source(static_cast<std::size_t>(total));
  // Odometer over the new digit string; old index accumulates old strides.
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::vector<int> new_dims(static_cast<std::size_t>(n));
  std::vector<Index> old_strides(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    new_dims[static_cast<std::size_t>(k)] = shape.dim(order[static_cast<std::size_t>(k)]);
    old_strides[static_cast<std::size_t>(k)] = shape.stride(order[static_cast<std::size_t>(k)]);
  }
  Index old_index = 0;
  for (Index idx = 0; idx < total; ++idx) {
    source[static_cast<std::size_t>(idx)] = old_index;
    for (int k = n - 1; k >= 0; --k) {
      auto& dgt = digits[static_cast<std::size_t>(k)];
      ++dgt;
      old_index += old_strides[static_cast<std::size_t>(k)];
      if (dgt < new_dims[static_cast<std::size_t>(k)]) break;
      old_index -= old_strides[static_cast<std::size_t>(k)] * dgt;
      dgt = 0;
    }
  }
  return source;
}

Amplitudes permute_factors(const RegisterShape& shape, const Amplitudes& amps,
                           const FactorPermutation& perm) {
  if (amps.size() != shape.total_dim()) throw QbcError("permute_factors: length mismatch");
  const auto src = permutation_source_indices(shape, perm);
  Amplitudes out(amps.size());
  for (Index n = 0; n < amps.size(); ++n) out(n) = amps(src[static_cast<std::size_t>(n)]);
  return out;
}

Operator permute_factors(const RegisterShape& shape, const Operator& op,
                         const FactorPermutation& perm) {
  const Index dim = shape.total_dim();
  if (op.rows() != dim || op.cols() != dim) throw QbcError("permute_factors: shape mismatch");
  const auto src = permutation_source_indices(shape, perm);
  Operator out(dim, dim);
  for (Index c = 0; c < dim; ++c) {
    const Index sc = src[static_cast<std::size_t>(c)];
    for (Index r = 0; r < dim; ++r) out(r, c) = op(src[static_cast<std::size_t>(r)], sc);
  }
  return out;
}

Operator factor_permutation_operator(const RegisterShape& shape, const FactorPermutation& perm) {
  const auto src = permutation_source_indices(shape, perm);
  const Index dim = shape.total_dim();
  Operator p = Operator::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) p(n, src[static_cast<std::size_t>(n)]) = 1.0;
  return p;
}

Bipartition::Bipartition(const RegisterShape& shape, std::vector<int> side)
    : shape_(shape), one_(std::move(side)) {
  std::sort(one_.begin(), one_.end());
  if (std::adjacent_find(one_.begin(), one_.end()) != one_.end()) {
    throw QbcError("Bipartition: repeated factor");
  }
  for (int f : one_) {
    if (f < 0 || f >= shape.num_factors()) throw QbcError("Bipartition: factor out of range");
  }
  for (int f = 0; f < shape.num_factors(); ++f) {
    if (!std::binary_search(one_.begin(), one_.end(), f)) two_.push_back(f);
  }
  if (one_.empty() || two_.empty()) throw QbcError("Bipartition: both sides must be nonempty");
  n1_ = shape.subshape(one_).total_dim();
  n2_ = shape.subshape(two_).total_dim();
  if (n2_ > n1_) {
    std::swap(one_, two_);
    std::swap(n1_, n2_);
  }
}

FactorPermutation Bipartition::to_cut_order() const {
  std::vector<int> order = one_;
  order.insert(order.end(), two_.begin(), two_.end());
  return FactorPermutation::from_order(std::move(order));
}

std::string Bipartition::label() const {
  std::ostringstream os;
  auto put = [&os](const std::vector<int>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
  };
  put(two_);
  os << '|';
  put(one_);
  return os.str();
}

std::vector<Bipartition> single_factor_cuts(const RegisterShape& shape) {
  std::vector<Bipartition> cuts;
  for (int f = 0; f < shape.num_factors(); ++f) cuts.emplace_back(shape, std::vector<int>{f});
  return cuts;
}

}  // namespace ameqbc

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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace ameqbc {

using Complex = std::complex<double>;
using Index = Eigen::Index;
/// Dense operator on a register (or a subset of its factors).
using Operator = Eigen::MatrixXcd;
using Amplitudes = Eigen::VectorXcd;

/// Raised for contract violations: bad dimensions, indices, permutations,
/// non-normalized states, non-trace-preserving Kraus sets.
class QbcError : public std::runtime_error {
 public:
  explicit QbcError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
inline constexpr double kStructural = 1e-9;
inline constexpr double kRoundTrip = 1e-12;
}  // namespace tol

/// Largest absolute entry of a - b.
inline double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw QbcError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace ameqbc

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

#include "ameqbc/register.hpp"

namespace ameqbc {

/// Normalized pure state on a register.
class StateVector {
 public:
  /// Throws unless the squared norm is 1 within 1e-9.
  StateVector(RegisterShape shape, Amplitudes amplitudes);

  /// Rescales `amplitudes` to unit norm; throws on a zero vector.
  static StateVector normalized(RegisterShape shape, Amplitudes amplitudes);
  static StateVector basis(RegisterShape shape, Index index);

  const RegisterShape& shape() const { return shape_; }
  const Amplitudes& amplitudes() const { return amps_; }
  Complex operator[](Index i) const { return amps_(i); }

  /// <this|other>.
  Complex inner(const StateVector& other) const;

 private:
  RegisterShape shape_;
  Amplitudes amps_;
};

/// Hermitian, unit-trace operator on a register. Positivity is not checked on
/// construction (it needs a full eigendecomposition); see is_valid().
class DensityMatrix {
 public:
  DensityMatrix(RegisterShape shape, Operator entries);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(RegisterShape shape);

  const RegisterShape& shape() const { return shape_; }
  const Operator& entries() const { return rho_; }
  Index dim() const { return rho_.rows(); }

  /// Hermitian, trace one and all eigenvalues >= -tol.
  bool is_valid(double tol = tol::kStructural) const;
  double min_eigenvalue() const;
  /// Largest eigenvalue; 1 exactly for pure states.
  double max_eigenvalue() const;

 private:
  RegisterShape shape_;
  Operator rho_;
};

StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
Operator tensor(const Operator& a, const Operator& b);

/// Reduced state on the `keep` factors, in increasing factor order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);
/// Reduced state of a pure state, without forming |psi><psi|.
DensityMatrix partial_trace(const StateVector& psi, std::vector<int> keep);

/// F(rho, sigma) = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
/// |<psi|phi>|^2.
double fidelity(const StateVector& psi, const StateVector& phi);

/// Applies `op` on the ordered `support` factors (identity elsewhere) to every
/// column of `columns`, each column being a vector on `shape`.
Operator apply_local_left(const RegisterShape& shape, const std::vector<int>& support,
                          const Operator& op, const Operator& columns);

/// Dense embedding of a local operator into the full register.
Operator embed_local(const RegisterShape& shape, const std::vector<int>& support,
                     const Operator& op);

}  // namespace ameqbc

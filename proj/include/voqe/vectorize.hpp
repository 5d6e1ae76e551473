// Copyright 2026 The VOQE Authors
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

#include "voqe/operators.hpp"

namespace voqe {

/// Pure state on the doubled register (row subsystem (x) column subsystem).
///
/// For n system qubits the register has 2n qubits: row-subsystem qubits are
/// register qubits 0..n-1 (high-order bits), column-subsystem qubits are
/// n..2n-1. Amplitude (i, j) lives at index i * 2^n + j, so an n-qubit matrix
/// M maps to the state whose (i, j) amplitude is M_ij.
class DoubledState {
 public:
  DoubledState() = default;
  /// |0...0> on 2n qubits.
  explicit DoubledState(int n);
  /// Wraps raw amplitudes; length must be 4^n.
  DoubledState(int n, Vector amplitudes);

  int n() const { return n_; }
  int register_qubits() const { return 2 * n_; }
  Eigen::Index side() const { return Eigen::Index{1} << n_; }
  Eigen::Index size() const { return amplitudes_.size(); }

  Complex amplitude(Eigen::Index i, Eigen::Index j) const { return amplitudes_(i * side() + j); }
  const Vector& amplitudes() const { return amplitudes_; }
  Vector& amplitudes() { return amplitudes_; }
  Complex* data() { return amplitudes_.data(); }
  const Complex* data() const { return amplitudes_.data(); }

  double norm() const { return amplitudes_.norm(); }

 private:
  int n_ = 0;
  Vector amplitudes_;
};

/// |rho> = sum_ij rho_ij |i,j> / C with C the Frobenius norm of rho.
DoubledState vectorize(const DenseOperator& rho);

/// Inverse map without trace rescaling: M_ij = amplitude(i, j).
DenseOperator devectorize(const DoubledState& state);

/// devectorize followed by division by the trace. Throws if the trace vanishes.
DenseOperator to_density_matrix(const DoubledState& state);

bool is_hermitian_state(const DoubledState& state, double tol = kDefaultTol);

/// Hermitian state whose matrix is also positive semidefinite (min eigenvalue
/// >= -tol), after flipping the sign of a matrix with negative trace.
bool is_density_matrix_state(const DoubledState& state, double tol = kDefaultTol);

}  // namespace voqe

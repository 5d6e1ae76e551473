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

#include "voqe/vectorize.hpp"

#include <cmath>

namespace voqe {

DoubledState::DoubledState(int n) : n_(n) {
  if (n < 1 || n > kMaxSystemQubits) throw InvalidArgument("system qubit count out of range");
  amplitudes_ = Vector::Zero(Eigen::Index{1} << (2 * n));
  amplitudes_(0) = 1.0;
}

DoubledState::DoubledState(int n, Vector amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
  if (n < 1 || n > kMaxSystemQubits) throw InvalidArgument("system qubit count out of range");
  if (amplitudes_.size() != (Eigen::Index{1} << (2 * n))) {
    throw InvalidArgument("doubled state needs 4^n amplitudes");
  }
}

DoubledState vectorize(const DenseOperator& rho) {
  const double c = rho.matrix().norm();
  if (c == 0.0) throw InvalidArgument("vectorize: zero matrix has no normalized image");
  const Eigen::Index d = rho.dim();
  Vector amps(d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) amps(i * d + j) = rho(i, j) / c;
  return DoubledState(rho.qubits(), std::move(amps));
}

DenseOperator devectorize(const DoubledState& state) {
  const Eigen::Index d = state.side();
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = state.amplitude(i, j);
  return DenseOperator(std::move(m));
}

DenseOperator to_density_matrix(const DoubledState& state) {
  DenseOperator m = devectorize(state);
  const Complex tr = m.matrix().trace();
  if (std::abs(tr) < 1e-300) throw InvalidArgument("to_density_matrix: state has zero trace");
  return (1.0 / tr) * std::move(m);
}

bool is_hermitian_state(const DoubledState& state, double tol) {
  const Eigen::Index d = state.side();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i; j < d; ++j) {
      if (std::abs(state.amplitude(i, j) - std::conj(state.amplitude(j, i))) > tol) return false;
    }
  }
  return true;
}

bool is_density_matrix_state(const DoubledState& state, double tol) {
  if (!is_hermitian_state(state, tol)) return false;
  // The overall sign of a state is a global phase, so -rho counts as rho.
  DenseOperator m = devectorize(state);
  if (m.matrix().trace().real() < 0.0) m *= -1.0;
  const HermitianEigen eig = eig_hermitian(m, tol);
  return eig.values(0) >= -tol;
}

}  // namespace voqe

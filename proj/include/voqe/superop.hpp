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

#include <vector>

#include "voqe/operators.hpp"

namespace voqe {

struct JumpChannel {
  DenseOperator op;
  double rate = 0.0;
};

/// d rho/dt = -i[H, rho] + sum_k rate_k (F_k rho F_k^dag - {F_k^dag F_k, rho}/2).
struct LindbladModel {
  DenseOperator hamiltonian;
  std::vector<JumpChannel> jumps;

  int qubits() const { return hamiltonian.qubits(); }
  /// Hermitian H, nonnegative rates, matching dimensions, size cap.
  void validate() const;
};

/// H_nh = h - i * gamma with both parts Hermitian.
struct NhhModel {
  DenseOperator h;
  DenseOperator gamma;

  int qubits() const { return h.qubits(); }
  void validate() const;
  DenseOperator effective_hamiltonian() const;
};

/// Right-hand side L[rho] evaluated directly in matrix form.
DenseOperator apply_lindbladian(const LindbladModel& model, const DenseOperator& rho);

/// Vectorized Liouvillian L such that vec(L[rho]) = L vec(rho), using the
/// row-major vectorization A rho B -> (A (x) B^T) vec(rho).
DenseOperator build_lindblad_superop(const LindbladModel& model);

/// Vectorized nHH generator with the trace term frozen at `trace_gamma_rho`:
/// -i(h (x) I - I (x) h^T) - (G (x) I + I (x) G^T) + 2 tr[G rho] I.
DenseOperator build_nhh_superop(const NhhModel& model, double trace_gamma_rho);

/// The part of build_nhh_superop that does not depend on tr[G rho].
DenseOperator nhh_superop_base(const NhhModel& model);

/// Exact steady state: solves L vec(rho) = 0 with tr rho = 1 by LU, then
/// Hermitizes. Throws NonUniqueSteadyState when the second-smallest
/// eigenvalue of L^dag L is below 1e-10.
DenseOperator exact_lme_steady_state(const DenseOperator& lhat);

struct NhhEigenpair {
  Complex value;
  Vector vector;    // unit norm right eigenvector
  double residual;  // |(H_nh - E) v|, large near exceptional points
};

/// Full right eigendecomposition of h - i gamma, sorted by (Re E, Im E).
std::vector<NhhEigenpair> exact_nhh_spectrum(const NhhModel& model);

}  // namespace voqe

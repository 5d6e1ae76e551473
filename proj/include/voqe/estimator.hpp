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

// Shot-based readout of tr[O rho] from a vectorized state.
//
// The doubled state is rotated into the eigenbasis of O, measured in the
// computational basis, and only the diagonal outcomes |i,i> are kept. With
// m_i counts on |i,i> the estimate is sum_i sqrt(m_i) o_i / sum_i sqrt(m_i):
// the amplitude on |i,i> is proportional to rho'_ii, so counts carry rho'_ii^2.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voqe/vectorize.hpp"

namespace voqe {

struct PauliTerm {
  double coefficient = 0.0;
  std::string labels;  // one of I, X, Y, Z per site
};

struct PauliDecomposition {
  std::vector<PauliTerm> terms;
  std::size_t k() const { return terms.size(); }
  DenseOperator reconstruct(int n) const;
};

/// Expansion of a Hermitian operator in Pauli strings; terms with
/// |coefficient| <= drop_below are omitted.
PauliDecomposition pauli_decompose(const DenseOperator& o, double drop_below = 1e-14);

/// Retained samples below this count mark an estimate as low confidence.
inline constexpr std::uint64_t kLowConfidenceRetained = 30;

struct PostselectResult {
  double estimate = 0.0;
  double eta_hat = 0.0;  // retained / shots
  std::uint64_t retained = 0;
  bool low_confidence = false;
};

/// Post-selected estimate of tr[O rho] / tr[rho] for Hermitian `o` on the
/// n system qubits. Throws PostselectionStarved when no shot lands on a
/// diagonal outcome.
PostselectResult postselect_estimate(const DoubledState& state, const DenseOperator& o, std::uint64_t shots,
                                     std::uint64_t seed);

struct GeneralEstimate {
  double estimate = 0.0;
  std::vector<PostselectResult> per_term;  // aligned with `decomposition.terms`
  PauliDecomposition decomposition;
};

/// Pauli-decomposes `o` and estimates each non-identity term separately with
/// `shots_per_term` shots; the identity term contributes its coefficient.
/// Term t is sampled with seed `seed + t`.
GeneralEstimate postselect_estimate_general(const DoubledState& state, const DenseOperator& o,
                                            std::uint64_t shots_per_term, std::uint64_t seed);

/// Worst-case shot count M = (1 / eta) (var / epsilon^2)^2.
double measurement_cost(double epsilon, double eta, double var_o);

struct TermCost {
  double eta = 1.0;
  double var = 0.0;
};

/// Multi-term form M = K (sum_t var_t / sqrt(eta_t) / epsilon^2)^2.
double measurement_cost(double epsilon, const std::vector<TermCost>& terms);

/// Exact sum_i |amplitude(i, i)|^2 / norm^2: the infinite-shot post-selection rate.
double diagonal_weight(const DoubledState& state);

/// Leading-order standard deviation of the post-selected estimator after M
/// shots: sqrt(sum_i (o_i - f)^2) / (2 S sqrt(M)) with S = sum_i sqrt(p_i),
/// p_i the probability of |i,i> in O's eigenbasis and f the infinite-shot estimate.
double postselect_stddev(const DoubledState& state, const DenseOperator& o, std::uint64_t shots);

}  // namespace voqe

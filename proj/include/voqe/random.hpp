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

// Random instances for property checks.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "voqe/superop.hpp"

namespace voqe {

/// Mixes a tuple of integers into one 64-bit seed (seed_seq over 32-bit
/// halves), so that (seed, stream, point, restart) tuples give unrelated streams.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// Matrix with i.i.d. standard complex Gaussian entries.
Matrix random_ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

/// Haar-random unitary on `qubits` qubits (QR with the phase correction).
DenseOperator random_unitary(int qubits, std::mt19937_64& rng);

DenseOperator random_hermitian(int qubits, std::mt19937_64& rng);

/// Full-rank random density matrix G G^dag / tr.
DenseOperator random_density_matrix(int qubits, std::mt19937_64& rng);

/// Random Hermitian H plus 1..3 random jump operators with rates in (0, 2).
LindbladModel random_lindblad_model(int qubits, std::mt19937_64& rng);

/// Random two-qubit gate U with U = S conj(U) S (S the swap), the property a
/// gate wired across (RS s, CS s) needs. Drawn as exp(-i K) with K a random
/// combination of P(x)Q + Q(x)P (odd number of Y) and P(x)Q - Q(x)P (even),
/// times CZ with probability 1/2.
DenseOperator random_self_paired_gate(std::mt19937_64& rng);

}  // namespace voqe

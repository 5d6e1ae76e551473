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

// Hermitian-preserving ansatz (HPA) circuits on the doubled register.
//
// A unitary U on the doubled space preserves Hermitian states exactly when
//   <i,j|U|k,l> == conj(<j,i|U|l,k>)   for all basis indices i, j, k, l.
// Circuits are assembled from three block kinds that each satisfy this:
//   Type1  U (x) U*          : the same unitary on row and column subsystems,
//                              conjugated on the column side
//   Type2  U2 and its partner: U2 on (RS a, CS b), U2~ on (RS b, CS a), with
//                              U2~ = sum_k s_k B_k* (x) A_k* built from the
//                              operator-Schmidt form U2 = sum_k s_k A_k (x) B_k
//   Type3  U3 on (RS a, CS a): self-paired gates such as CZ; U3 must already
//                              satisfy the condition as a one-site operator
//
// System site s maps to register qubit s (row subsystem) and n + s (column).

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "voqe/operators.hpp"

namespace voqe {

enum class BlockKind { kType1, kType2, kType3 };

std::string to_string(BlockKind kind);

/// Parameter binding of the single-qubit gate
///   exp(-i a X) exp(-i b Y) exp(-i c Z),  (a, b, c) = sign .* theta[index].
struct EulerBinding {
  std::array<int, 3> index{};
  std::array<double, 3> sign{1.0, 1.0, 1.0};
};

/// 2x2 matrix of the Euler gate for given angles.
Matrix euler_matrix(double ax, double ay, double az);

/// One gate inside a block: either a fixed matrix or a bound Euler rotation.
struct BlockGate {
  std::vector<int> targets;  // register qubits, gate-local order
  Matrix fixed;
  std::optional<EulerBinding> euler;

  bool parameterized() const { return euler.has_value(); }
  Matrix matrix(std::span<const double> theta) const;
};

struct HpaBlock {
  BlockKind kind = BlockKind::kType1;
  int n = 0;
  std::vector<int> rs_targets;  // system sites touched on the row side
  std::vector<int> cs_targets;  // system sites touched on the column side
  std::vector<BlockGate> gates;

  /// Dense 4^n x 4^n unitary of the block.
  DenseOperator unitary(std::span<const double> theta = {}) const;
};

struct HpaCheck {
  bool passed = false;
  double max_violation = 0.0;
  std::array<Eigen::Index, 4> worst{};  // (i, j, k, l) of the largest violation
};

/// Checks <i,j|U|k,l> == conj(<j,i|U|l,k>) entrywise on a 2n-qubit operator.
HpaCheck verify_hpa_condition(const DenseOperator& u, double tol = kDefaultTol);

/// U1 on the row-side sites and conj(U1) on the column-side sites. The two
/// lists must have the same length; the block is checked against the HPA
/// condition at construction and rejected if it fails.
HpaBlock type1_block(int n, const DenseOperator& u1, const std::vector<int>& rs_sites,
                     const std::vector<int>& cs_sites);

/// U2 on (RS site_a, CS site_b) and U2~ = sum_k s_k B_k* (x) A_k* on
/// (RS site_b, CS site_a). The sites must differ.
HpaBlock type2_block(int n, const DenseOperator& u2, int site_a, int site_b);

/// A (row site, column site) pair that a Type3 gate acts on.
struct Wire {
  int rs = 0;
  int cs = 0;
};

/// The same two-qubit U3 applied once per wire. Rejected, with the violated
/// entry in the message, unless the resulting block satisfies the condition.
HpaBlock type3_block(int n, const DenseOperator& u3, const std::vector<Wire>& wiring);

/// How the column-side partner of a parameterized rotation is bound.
enum class Pairing {
  kConjugate,  // (-ax, +ay, -az): the complex conjugate, Hermitian preserving
  kIdentical,  // (+ax, +ay, +az): deliberately wrong, for negative controls
};

/// Type1 block of the Euler gate on `site`, bound to theta[first_param .. +2].
HpaBlock rotation_block(int n, int site, int first_param, Pairing pairing = Pairing::kConjugate);

/// Entangler wiring of one ansatz layer.
struct AnsatzLayout {
  bool ladder = true;  // nearest-neighbour CZ chain inside each subsystem (Type1)
  bool cross = true;   // CZ on (RS s, CS s) and on (RS s, CS s+1), (RS s+1, CS s) (Type3)
};

class HpaCircuit {
 public:
  HpaCircuit() = default;
  HpaCircuit(int n, int num_params);

  int n() const { return n_; }
  int num_params() const { return num_params_; }
  const std::vector<HpaBlock>& blocks() const { return blocks_; }

  void append(HpaBlock block);
  bool type1_only() const;

  /// Dense unitary of the whole circuit (test and verification use).
  DenseOperator unitary(std::span<const double> theta) const;

  /// Human-readable listing of blocks, targets and parameter bindings.
  std::string describe() const;

 private:
  int n_ = 0;
  int num_params_ = 0;
  std::vector<HpaBlock> blocks_;
};

/// `depth` layers of [rotations on every site, entanglers per `layout`],
/// followed by a final rotation layer. 3n(depth + 1) parameters; parameter
/// 3 * (layer * n + site) + axis drives the rotation on that site. Accepts
/// n = 1, where the ladder is empty.
HpaCircuit layered_ansatz(int n, int depth, AnsatzLayout layout = {}, Pairing pairing = Pairing::kConjugate);

/// layered_ansatz with both entanglers, for the driven chain (n >= 2).
HpaCircuit xxz_ansatz(int n, int depth, AnsatzLayout layout = {}, Pairing pairing = Pairing::kConjugate);

/// Type1-only layered ansatz (rotations + CZ ladder, no cross-subsystem
/// gates), n >= 2. On |0...0> it prepares |psi> (x) |psi*>.
HpaCircuit nhh_ansatz(int n, int depth = 3);

}  // namespace voqe

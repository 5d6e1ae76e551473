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

#include <string_view>
#include <vector>

#include "voqe/common.hpp"

namespace voqe {

/// Dense complex square matrix acting on `qubits()` qubits (dim = 2^qubits).
///
/// Basis convention used everywhere in the library: qubit 0 is the most
/// significant bit of the basis index, and |0> is the +1 eigenstate of Z.
class DenseOperator {
 public:
  DenseOperator() = default;
  /// Throws InvalidArgument unless `m` is square with power-of-two dimension.
  explicit DenseOperator(Matrix m);

  static DenseOperator identity(int qubits);
  static DenseOperator zero(int qubits);

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  DenseOperator adjoint() const;
  DenseOperator conjugate() const;
  DenseOperator transpose() const;

  bool is_hermitian(double tol = kDefaultTol) const;
  bool is_unitary(double tol = kDefaultTol) const;

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator-=(const DenseOperator& other);
  DenseOperator& operator*=(Complex s);

  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
  friend DenseOperator operator*(Complex s, DenseOperator a) { return a *= s; }
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

 private:
  Matrix m_;
  int qubits_ = 0;
};

/// Largest absolute entry of a matrix; the norm used by every tolerance check.
double max_abs(const Matrix& m);

/// Kronecker product a (x) b; `a` occupies the high-order qubits.
Matrix kron(const Matrix& a, const Matrix& b);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Expands a k-qubit `gate` acting on register qubits `targets` (in the
/// gate's own qubit order) to the full 2^total_qubits space.
Matrix embed(const Matrix& gate, const std::vector<int>& targets, int total_qubits);

/// Single-qubit operator for a label in {I, X, Y, Z, +, -}.
/// `+` is sigma^+ = |0><1| and `-` is sigma^- = |1><0|.
Matrix single_qubit_operator(char label);

/// Tensor product of per-site labels, e.g. pauli_string(3, "XIZ").
DenseOperator pauli_string(int n, std::string_view labels);

/// `label` on `site` of an n-qubit register, identity elsewhere.
DenseOperator site_operator(int n, int site, char label);

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // columns are the eigenvectors
};

/// Eigendecomposition of a Hermitian operator; throws on non-Hermitian input.
HermitianEigen eig_hermitian(const DenseOperator& a, double tol = kDefaultTol);
HermitianEigen eig_hermitian(const Matrix& a, double tol = kDefaultTol);

/// U = sum_a coefficients[a] * left_ops[a] (x) right_ops[a] with orthonormal
/// operator bases (tr[A_a A_b^dag] = delta_ab) and descending coefficients.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<DenseOperator> left_ops;
  std::vector<DenseOperator> right_ops;

  std::size_t rank() const { return coefficients.size(); }
  DenseOperator reconstruct() const;
};

/// Operator-Schmidt decomposition across the first-half / second-half qubit
/// split. Singular values below `drop_below` are discarded.
SchmidtDecomposition operator_schmidt(const DenseOperator& u, double drop_below = 1e-12);

}  // namespace voqe

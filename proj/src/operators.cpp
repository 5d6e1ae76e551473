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

#include "voqe/operators.hpp"

#include <bit>
#include <string>

namespace voqe {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 1 || !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
    throw InvalidArgument("operator dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

}  // namespace

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw InvalidArgument("operator must be square");
  }
  qubits_ = qubits_for_dim(m_.rows());
}

DenseOperator DenseOperator::identity(int qubits) {
  if (qubits < 0 || qubits > 2 * kMaxSystemQubits) throw InvalidArgument("qubit count out of range");
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return DenseOperator(Matrix::Identity(dim, dim));
}

DenseOperator DenseOperator::zero(int qubits) {
  if (qubits < 0 || qubits > 2 * kMaxSystemQubits) throw InvalidArgument("qubit count out of range");
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return DenseOperator(Matrix::Zero(dim, dim));
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(m_.adjoint()); }
DenseOperator DenseOperator::conjugate() const { return DenseOperator(m_.conjugate()); }
DenseOperator DenseOperator::transpose() const { return DenseOperator(m_.transpose()); }

bool DenseOperator::is_hermitian(double tol) const {
  return max_abs(m_ - m_.adjoint()) <= tol;
}

bool DenseOperator::is_unitary(double tol) const {
  return max_abs(m_.adjoint() * m_ - Matrix::Identity(dim(), dim())) <= tol;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  if (other.dim() != dim()) throw InvalidArgument("dimension mismatch in operator sum");
  m_ += other.m_;
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& other) {
  if (other.dim() != dim()) throw InvalidArgument("dimension mismatch in operator difference");
  m_ -= other.m_;
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("dimension mismatch in operator product");
  return DenseOperator(a.m_ * b.m_);
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  return DenseOperator(kron(a.matrix(), b.matrix()));
}

Matrix embed(const Matrix& gate, const std::vector<int>& targets, int total_qubits) {
  const int k = static_cast<int>(targets.size());
  if (gate.rows() != (Eigen::Index{1} << k) || gate.cols() != gate.rows()) {
    throw InvalidArgument("embed: gate size does not match target count");
  }
  std::uint64_t seen = 0;
  for (int t : targets) {
    if (t < 0 || t >= total_qubits) throw InvalidArgument("embed: target out of range");
    if (seen & (std::uint64_t{1} << t)) throw InvalidArgument("embed: duplicate target");
    seen |= std::uint64_t{1} << t;
  }
  const Eigen::Index dim = Eigen::Index{1} << total_qubits;
  // local index of basis state x restricted to the targets, first target = high bit
  auto local = [&](Eigen::Index x) {
    Eigen::Index l = 0;
    for (int t : targets) l = (l << 1) | ((x >> (total_qubits - 1 - t)) & 1);
    return l;
  };
  Eigen::Index target_mask = 0;
  for (int t : targets) target_mask |= Eigen::Index{1} << (total_qubits - 1 - t);
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if ((r & ~target_mask) != (c & ~target_mask)) continue;
      out(r, c) = gate(local(r), local(c));
    }
  }
  return out;
}

Matrix single_qubit_operator(char label) {
  using namespace std::complex_literals;
  Matrix m = Matrix::Zero(2, 2);
  switch (label) {
    case 'I':
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 'X':
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 'Y':
      m(0, 1) = -1.0i;
      m(1, 0) = 1.0i;
      break;
    case 'Z':
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case '+':
      m(0, 1) = 1.0;
      break;
    case '-':
      m(1, 0) = 1.0;
      break;
    default:
      throw InvalidArgument(std::string("unknown single-qubit label '") + label + "'");
  }
  return m;
}

DenseOperator pauli_string(int n, std::string_view labels) {
  if (n < 1) throw InvalidArgument("pauli_string needs at least one qubit");
  if (n > 2 * kMaxSystemQubits) throw InvalidArgument("pauli_string: too many qubits");
  if (labels.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("pauli_string: expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  }
  Matrix out = single_qubit_operator(labels[0]);
  for (int q = 1; q < n; ++q) out = kron(out, single_qubit_operator(labels[q]));
  return DenseOperator(std::move(out));
}

DenseOperator site_operator(int n, int site, char label) {
  if (site < 0 || site >= n) throw InvalidArgument("site index out of range");
  std::string labels(static_cast<std::size_t>(n), 'I');
  labels[static_cast<std::size_t>(site)] = label;
  return pauli_string(n, labels);
}

HermitianEigen eig_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw InvalidArgument("eig_hermitian: matrix not square");
  if (max_abs(a - a.adjoint()) > tol) throw InvalidArgument("eig_hermitian: matrix is not Hermitian");
  // Symmetrize so round-off in the input does not leak into the solver.
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw Error("eig_hermitian: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianEigen eig_hermitian(const DenseOperator& a, double tol) {
  return eig_hermitian(a.matrix(), tol);
}

DenseOperator SchmidtDecomposition::reconstruct() const {
  if (coefficients.empty()) throw InvalidArgument("empty Schmidt decomposition");
  const Eigen::Index d = left_ops.front().dim();
  Matrix out = Matrix::Zero(d * d, d * d);
  for (std::size_t a = 0; a < coefficients.size(); ++a) {
    out += coefficients[a] * kron(left_ops[a].matrix(), right_ops[a].matrix());
  }
  return DenseOperator(std::move(out));
}

SchmidtDecomposition operator_schmidt(const DenseOperator& u, double drop_below) {
  if (u.qubits() % 2 != 0 || u.qubits() == 0) {
    throw InvalidArgument("operator_schmidt: need an even, nonzero qubit count for an equal split");
  }
  const Eigen::Index d = Eigen::Index{1} << (u.qubits() / 2);
  const Matrix& m = u.matrix();

  // Realignment: R[(a1,a2),(b1,b2)] = U[(a1,b1),(a2,b2)], so that U = sum s A (x) B
  // becomes R = sum s vec(A) vec(B)^T and the SVD of R yields the expansion.
  Matrix r(d * d, d * d);
  for (Eigen::Index a1 = 0; a1 < d; ++a1)
    for (Eigen::Index b1 = 0; b1 < d; ++b1)
      for (Eigen::Index a2 = 0; a2 < d; ++a2)
        for (Eigen::Index b2 = 0; b2 < d; ++b2)
          r(a1 * d + a2, b1 * d + b2) = m(a1 * d + b1, a2 * d + b2);

  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();

  SchmidtDecomposition out;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) < drop_below) break;  // singular values come sorted descending
    Matrix a(d, d);
    Matrix b(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        a(i, j) = svd.matrixU()(i * d + j, k);
        b(i, j) = std::conj(svd.matrixV()(i * d + j, k));
      }
    }
    out.coefficients.push_back(s(k));
    out.left_ops.emplace_back(std::move(a));
    out.right_ops.emplace_back(std::move(b));
  }
  return out;
}

}  // namespace voqe

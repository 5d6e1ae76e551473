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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "voqe/operators.hpp"
#include "voqe/random.hpp"

namespace voqe {
namespace {

using namespace std::complex_literals;

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Matrix cz() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

// Entry-by-entry Kronecker product, written out independently of kron().
Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

TEST(DenseOperator, RejectsNonPowerOfTwo) {
  EXPECT_THROW(DenseOperator(Matrix::Identity(3, 3)), InvalidArgument);
  EXPECT_THROW(DenseOperator(Matrix::Identity(2, 4)), InvalidArgument);
  EXPECT_EQ(DenseOperator(Matrix::Identity(8, 8)).qubits(), 3);
}

TEST(DenseOperator, Predicates) {
  EXPECT_TRUE(DenseOperator(single_qubit_operator('Y')).is_hermitian());
  EXPECT_TRUE(DenseOperator(single_qubit_operator('Y')).is_unitary());
  EXPECT_FALSE(DenseOperator(single_qubit_operator('+')).is_hermitian());
  EXPECT_FALSE(DenseOperator(single_qubit_operator('+')).is_unitary());
  Matrix almost = Matrix::Identity(2, 2);
  almost(0, 1) = 1e-11;
  EXPECT_TRUE(DenseOperator(almost).is_unitary());
  almost(0, 1) = 1e-8;
  EXPECT_FALSE(DenseOperator(almost).is_unitary());
}

TEST(PauliString, SingleSiteDefinitions) {
  const DenseOperator z = pauli_string(1, "Z");
  EXPECT_EQ(z(0, 0), Complex(1.0));
  EXPECT_EQ(z(1, 1), Complex(-1.0));
  EXPECT_EQ(z(0, 1), Complex(0.0));

  const DenseOperator plus = pauli_string(1, "+");
  EXPECT_EQ(plus(0, 1), Complex(1.0));
  EXPECT_EQ(plus(0, 0), Complex(0.0));
  EXPECT_EQ(plus(1, 0), Complex(0.0));
  EXPECT_EQ(plus(1, 1), Complex(0.0));
  EXPECT_EQ(pauli_string(1, "-")(1, 0), Complex(1.0));

  const DenseOperator y = pauli_string(1, "Y");
  EXPECT_EQ(y(0, 1), -1.0i);
  EXPECT_EQ(y(1, 0), 1.0i);
}

TEST(PauliString, FirstLabelIsHighBit) {
  const DenseOperator xi = pauli_string(2, "XI");
  EXPECT_EQ(xi(0, 2), Complex(1.0));
  EXPECT_EQ(xi(0, 1), Complex(0.0));
  EXPECT_LT(max_abs(xi.matrix() - kron_oracle(single_qubit_operator('X'), Matrix::Identity(2, 2))), 1e-15);
}

TEST(PauliString, RejectsBadInput) {
  EXPECT_THROW(pauli_string(2, "X"), InvalidArgument);
  EXPECT_THROW(pauli_string(1, "Q"), InvalidArgument);
}

TEST(Kron, MatchesEntrywiseOracle) {
  std::mt19937_64 rng(11);
  const Matrix a = random_ginibre(2, 2, rng);
  const Matrix b = random_ginibre(4, 4, rng);
  EXPECT_LT(max_abs(kron(a, b) - kron_oracle(a, b)), 1e-14);
}

TEST(Embed, MatchesKronWithPermutation) {
  std::mt19937_64 rng(3);
  const Matrix g = random_unitary(2, rng).matrix();
  // Targets in order are already the leading qubits.
  EXPECT_LT(max_abs(embed(g, {0, 1}, 3) - kron_oracle(g, Matrix::Identity(2, 2))), 1e-14);
  // Reversed targets: conjugate by the swap of the two qubits.
  const Matrix swap = [] {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return s;
  }();
  EXPECT_LT(max_abs(embed(g, {1, 0}, 2) - swap * g * swap), 1e-14);
  // Non-adjacent targets {0, 2}: compare against an index-level oracle.
  const Matrix e = embed(g, {0, 2}, 3);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const int rb1 = (r >> 1) & 1, cb1 = (c >> 1) & 1;
      const int rl = ((r >> 2) & 1) << 1 | (r & 1);
      const int cl = ((c >> 2) & 1) << 1 | (c & 1);
      const Complex expect = rb1 == cb1 ? g(rl, cl) : Complex(0.0);
      EXPECT_LT(std::abs(e(r, c) - expect), 1e-14);
    }
  }
}

TEST(SiteOperator, PlacesLabel) {
  const DenseOperator z1 = site_operator(2, 1, 'Z');
  EXPECT_LT(max_abs(z1.matrix() - kron_oracle(Matrix::Identity(2, 2), single_qubit_operator('Z'))), 1e-15);
  EXPECT_THROW(site_operator(2, 2, 'Z'), InvalidArgument);
}

TEST(EigHermitian, PauliSpectra) {
  const HermitianEigen z = eig_hermitian(pauli_string(1, "Z"));
  EXPECT_NEAR(z.values(0), -1.0, 1e-14);
  EXPECT_NEAR(z.values(1), 1.0, 1e-14);

  const HermitianEigen x = eig_hermitian(pauli_string(1, "X"));
  EXPECT_NEAR(x.values(0), -1.0, 1e-14);
  EXPECT_NEAR(x.values(1), 1.0, 1e-14);
  // Eigenvector for -1 is (|0> - |1>)/sqrt(2) up to phase.
  const Vector minus = Vector{{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}};
  EXPECT_NEAR(std::abs(minus.dot(x.vectors.col(0))), 1.0, 1e-12);
}

TEST(EigHermitian, RandomReconstruction) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const DenseOperator h = random_hermitian(3, rng);
    const HermitianEigen e = eig_hermitian(h);
    const Matrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LT(max_abs(back - h.matrix()), 1e-10);
    EXPECT_LT(max_abs(e.vectors.adjoint() * e.vectors - Matrix::Identity(8, 8)), 1e-10);
    for (Eigen::Index k = 1; k < e.values.size(); ++k) EXPECT_LE(e.values(k - 1), e.values(k));
  }
}

TEST(EigHermitian, RejectsNonHermitian) {
  EXPECT_THROW(eig_hermitian(pauli_string(1, "+")), InvalidArgument);
}

void expect_valid_schmidt(const SchmidtDecomposition& s, const DenseOperator& u) {
  EXPECT_LT(max_abs(s.reconstruct().matrix() - u.matrix()), 1e-10);
  for (std::size_t a = 0; a < s.rank(); ++a) {
    if (a > 0) {
      EXPECT_GE(s.coefficients[a - 1], s.coefficients[a]);
    }
    for (std::size_t b = 0; b < s.rank(); ++b) {
      const Complex la = (s.left_ops[a].matrix() * s.left_ops[b].matrix().adjoint()).trace();
      const Complex rb = (s.right_ops[a].matrix() * s.right_ops[b].matrix().adjoint()).trace();
      EXPECT_LT(std::abs(la - (a == b ? 1.0 : 0.0)), 1e-10);
      EXPECT_LT(std::abs(rb - (a == b ? 1.0 : 0.0)), 1e-10);
    }
  }
}

TEST(OperatorSchmidt, ProductHasRankOne) {
  std::mt19937_64 rng(8);
  const DenseOperator v = random_unitary(1, rng), w = random_unitary(1, rng);
  const DenseOperator u = kron(v, w);
  const SchmidtDecomposition s = operator_schmidt(u);
  ASSERT_EQ(s.rank(), 1u);
  EXPECT_NEAR(s.coefficients[0], 2.0, 1e-12);
  // A1 = V / sqrt(2) up to a phase that B1 absorbs.
  const Complex overlap = (s.left_ops[0].matrix().adjoint() * v.matrix()).trace() / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12);
  expect_valid_schmidt(s, u);
}

TEST(OperatorSchmidt, CnotHasTwoEqualTerms) {
  const DenseOperator u(cnot());
  const SchmidtDecomposition s = operator_schmidt(u);
  ASSERT_EQ(s.rank(), 2u);
  EXPECT_NEAR(s.coefficients[0], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.coefficients[1], std::sqrt(2.0), 1e-12);
  // The left operators span the diagonal projectors {|0><0|, |1><1|}.
  for (const DenseOperator& a : s.left_ops) {
    EXPECT_LT(std::abs(a(0, 1)), 1e-12);
    EXPECT_LT(std::abs(a(1, 0)), 1e-12);
  }
  expect_valid_schmidt(s, u);
}

TEST(OperatorSchmidt, CzReconstructs) {
  const DenseOperator u(cz());
  const SchmidtDecomposition s = operator_schmidt(u);
  ASSERT_EQ(s.rank(), 2u);
  EXPECT_NEAR(s.coefficients[0], s.coefficients[1], 1e-12);
  EXPECT_LT(max_abs(s.reconstruct().matrix() - u.matrix()), 1e-12);
}

TEST(OperatorSchmidt, RandomTwoQubitProperty) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    const DenseOperator u = random_unitary(2, rng);
    const SchmidtDecomposition s = operator_schmidt(u);
    expect_valid_schmidt(s, u);
    // sum lambda^2 = tr[U U^dag] = 4.
    double sum = 0.0;
    for (double c : s.coefficients) sum += c * c;
    EXPECT_NEAR(sum, 4.0, 1e-10);
  }
}

}  // namespace
}  // namespace voqe

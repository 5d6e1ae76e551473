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

// Scalar kernels against dense oracles, and the AVX2 table against the
// scalar one.

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "voqe/kernels.hpp"
#include "voqe/operators.hpp"
#include "voqe/random.hpp"

namespace voqe {
namespace {

constexpr double kEquivTol = 1e-12;

std::vector<Complex> random_vector(std::size_t len, std::mt19937_64& rng) {
  const Matrix m = random_ginibre(static_cast<Eigen::Index>(len), 1, rng);
  return std::vector<Complex>(m.data(), m.data() + len);
}

Vector as_vector(const std::vector<Complex>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<Complex> row_major(const Matrix& m) {
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Stride s on a register of q qubits belongs to qubit q - 1 - log2(s).
int qubit_of(std::size_t stride, int qubits) {
  int b = 0;
  while ((std::size_t{1} << b) != stride) ++b;
  return qubits - 1 - b;
}

class KernelTables : public ::testing::TestWithParam<int> {
 protected:
  const kernels::KernelTable& table() const {
    if (GetParam() == 0) return kernels::scalar_kernels();
    return *kernels::avx2_kernels();
  }
  void SetUp() override {
    if (GetParam() == 1 && kernels::avx2_kernels() == nullptr) GTEST_SKIP() << "AVX2 not available";
  }
};

TEST_P(KernelTables, Apply1qMatchesEmbeddedMatrix) {
  std::mt19937_64 rng(1);
  const int q = 5;
  const std::size_t len = std::size_t{1} << q;
  for (std::size_t stride = 1; stride < len; stride <<= 1) {
    const Matrix g = random_unitary(1, rng).matrix();
    std::vector<Complex> amp = random_vector(len, rng);
    const Vector expect = embed(g, {qubit_of(stride, q)}, q) * as_vector(amp);
    const std::vector<Complex> m = row_major(g);
    table().apply_1q(amp.data(), len, stride, m.data());
    EXPECT_LT((as_vector(amp) - expect).cwiseAbs().maxCoeff(), kEquivTol) << "stride " << stride;
  }
}

TEST_P(KernelTables, Apply2qMatchesEmbeddedMatrix) {
  std::mt19937_64 rng(2);
  const int q = 5;
  const std::size_t len = std::size_t{1} << q;
  for (std::size_t hi = 2; hi < len; hi <<= 1) {
    for (std::size_t lo = 1; lo < hi; lo <<= 1) {
      const Matrix g = random_unitary(2, rng).matrix();
      std::vector<Complex> amp = random_vector(len, rng);
      const Vector expect = embed(g, {qubit_of(hi, q), qubit_of(lo, q)}, q) * as_vector(amp);
      const std::vector<Complex> m = row_major(g);
      table().apply_2q(amp.data(), len, hi, lo, m.data());
      EXPECT_LT((as_vector(amp) - expect).cwiseAbs().maxCoeff(), kEquivTol);
    }
  }
}

TEST_P(KernelTables, ApplyDiag2qMatchesEmbeddedMatrix) {
  std::mt19937_64 rng(3);
  const int q = 4;
  const std::size_t len = std::size_t{1} << q;
  for (std::size_t hi = 2; hi < len; hi <<= 1) {
    for (std::size_t lo = 1; lo < hi; lo <<= 1) {
      std::vector<Complex> diag = random_vector(4, rng);
      const Matrix g = as_vector(diag).asDiagonal();
      std::vector<Complex> amp = random_vector(len, rng);
      const Vector expect = embed(g, {qubit_of(hi, q), qubit_of(lo, q)}, q) * as_vector(amp);
      table().apply_diag_2q(amp.data(), len, hi, lo, diag.data());
      EXPECT_LT((as_vector(amp) - expect).cwiseAbs().maxCoeff(), kEquivTol);
    }
  }
}

TEST_P(KernelTables, MatvecAndAdjoint) {
  std::mt19937_64 rng(4);
  for (Eigen::Index rows : {1, 3, 16, 17}) {
    for (Eigen::Index cols : {1, 5, 16}) {
      const Matrix a = random_ginibre(rows, cols, rng);
      const Matrix x = random_ginibre(cols, 1, rng);
      const Matrix z = random_ginibre(rows, 1, rng);
      Vector y(rows), w(cols);
      table().matvec(a.data(), rows, cols, x.data(), y.data());
      table().adjoint_matvec(a.data(), rows, cols, z.data(), w.data());
      EXPECT_LT((y - a * x).cwiseAbs().maxCoeff(), kEquivTol);
      EXPECT_LT((w - a.adjoint() * z).cwiseAbs().maxCoeff(), kEquivTol);
    }
  }
}

TEST_P(KernelTables, Dot) {
  std::mt19937_64 rng(5);
  for (std::size_t len : {1u, 2u, 7u, 64u, 1023u}) {
    const std::vector<Complex> x = random_vector(len, rng), y = random_vector(len, rng);
    const Complex got = table().dot(x.data(), y.data(), len);
    EXPECT_LT(std::abs(got - as_vector(x).dot(as_vector(y))), kEquivTol * static_cast<double>(len));
  }
}

TEST_P(KernelTables, PairCorrelationGivesMatrixElements) {
  std::mt19937_64 rng(6);
  const int q = 4;
  const std::size_t len = std::size_t{1} << q;
  for (std::size_t stride = 1; stride < len; stride <<= 1) {
    const std::vector<Complex> lam = random_vector(len, rng), psi = random_vector(len, rng);
    Complex out[4];
    table().pair_correlation_1q(lam.data(), psi.data(), len, stride, out);
    const Matrix g = random_ginibre(2, 2, rng);
    Complex via_pairs = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) via_pairs += g(a, b) * out[2 * a + b];
    const Complex direct = as_vector(lam).dot(embed(g, {qubit_of(stride, q)}, q) * as_vector(psi));
    EXPECT_LT(std::abs(via_pairs - direct), kEquivTol);
  }
}

INSTANTIATE_TEST_SUITE_P(Tables, KernelTables, ::testing::Values(0, 1),
                         [](const auto& info) { return info.param == 0 ? "scalar" : "avx2"; });

// Same inputs through both tables; results must agree to 1e-12.
TEST(KernelEquivalence, Avx2MatchesScalar) {
  const kernels::KernelTable* fast = kernels::avx2_kernels();
  if (fast == nullptr) GTEST_SKIP() << "AVX2 not available";
  const kernels::KernelTable& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(7);
  const std::size_t len = 1024;
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Complex> base = random_vector(len, rng);
    const std::vector<Complex> m2 = row_major(random_unitary(1, rng).matrix());
    const std::vector<Complex> m4 = row_major(random_unitary(2, rng).matrix());
    const std::vector<Complex> d4 = random_vector(4, rng);
    for (std::size_t s = 1; s < len; s <<= 1) {
      std::vector<Complex> a = base, b = base;
      ref.apply_1q(a.data(), len, s, m2.data());
      fast->apply_1q(b.data(), len, s, m2.data());
      EXPECT_LT(max_diff(a, b), kEquivTol);
      for (std::size_t t = 1; t < s; t <<= 1) {
        a = base, b = base;
        ref.apply_2q(a.data(), len, s, t, m4.data());
        fast->apply_2q(b.data(), len, s, t, m4.data());
        EXPECT_LT(max_diff(a, b), kEquivTol);
        a = base, b = base;
        ref.apply_diag_2q(a.data(), len, s, t, d4.data());
        fast->apply_diag_2q(b.data(), len, s, t, d4.data());
        EXPECT_LT(max_diff(a, b), kEquivTol);
      }
      Complex ca[4], cb[4];
      ref.pair_correlation_1q(base.data(), a.data(), len, s, ca);
      fast->pair_correlation_1q(base.data(), a.data(), len, s, cb);
      for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(ca[k] - cb[k]), kEquivTol * 10);
    }
    const Matrix mat = random_ginibre(64, 64, rng);
    const std::vector<Complex> x = random_vector(64, rng);
    std::vector<Complex> ya(64), yb(64);
    ref.matvec(mat.data(), 64, 64, x.data(), ya.data());
    fast->matvec(mat.data(), 64, 64, x.data(), yb.data());
    EXPECT_LT(max_diff(ya, yb), kEquivTol);
    ref.adjoint_matvec(mat.data(), 64, 64, x.data(), ya.data());
    fast->adjoint_matvec(mat.data(), 64, 64, x.data(), yb.data());
    EXPECT_LT(max_diff(ya, yb), kEquivTol);
    EXPECT_LT(std::abs(ref.dot(base.data(), x.data(), 64) - fast->dot(base.data(), x.data(), 64)), kEquivTol);
  }
}

TEST(KernelDispatch, ActiveIsOneOfTheTables) {
  const kernels::KernelTable& act = kernels::active();
  const bool scalar = &act == &kernels::scalar_kernels();
  const bool avx2 = kernels::avx2_kernels() != nullptr && &act == kernels::avx2_kernels();
  EXPECT_TRUE(scalar || avx2) << act.name;
}

}  // namespace
}  // namespace voqe

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

#include "voqe/random.hpp"

#include <vector>

namespace voqe {

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::vector<std::uint32_t> words;
  for (std::uint64_t p : parts) {
    words.push_back(static_cast<std::uint32_t>(p));
    words.push_back(static_cast<std::uint32_t>(p >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 gen(seq);
  return gen();
}

Matrix random_ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

DenseOperator random_unitary(int qubits, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  const Matrix g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
  }
  return DenseOperator(std::move(q));
}

DenseOperator random_hermitian(int qubits, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  const Matrix g = random_ginibre(dim, dim, rng);
  return DenseOperator(0.5 * (g + g.adjoint()));
}

DenseOperator random_density_matrix(int qubits, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  const Matrix g = random_ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DenseOperator(0.5 * (rho + rho.adjoint()));
}

LindbladModel random_lindblad_model(int qubits, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_real_distribution<double> rate(0.0, 2.0);
  LindbladModel model{random_hermitian(qubits, rng), {}};
  const int k = count(rng);
  for (int i = 0; i < k; ++i) model.jumps.push_back({DenseOperator(random_ginibre(dim, dim, rng)), rate(rng)});
  return model;
}

DenseOperator random_self_paired_gate(std::mt19937_64& rng) {
  using namespace std::complex_literals;
  const char labels[4] = {'I', 'X', 'Y', 'Z'};
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix k = Matrix::Zero(4, 4);
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      const Matrix pq = kron(single_qubit_operator(labels[p]), single_qubit_operator(labels[q]));
      const Matrix qp = kron(single_qubit_operator(labels[q]), single_qubit_operator(labels[p]));
      const int ys = (p == 2) + (q == 2);
      k += normal(rng) * (ys % 2 == 1 ? Matrix(pq + qp) : Matrix(pq - qp));
    }
  }
  const HermitianEigen eig = eig_hermitian(k);
  Matrix phases = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) phases(i, i) = std::exp(-1.0i * eig.values(i));
  Matrix u = eig.vectors * phases * eig.vectors.adjoint();
  if (std::bernoulli_distribution(0.5)(rng)) {
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    u = cz * u;
  }
  return DenseOperator(std::move(u));
}

}  // namespace voqe

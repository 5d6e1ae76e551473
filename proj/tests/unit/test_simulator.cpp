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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "voqe/random.hpp"
#include "voqe/simulator.hpp"

namespace voqe {
namespace {

// Full-register matrix of a gate on `targets`, built as a sum over basis
// projectors rather than through embed(): entry (r, c) is the gate entry
// on the target bits when all other bits agree.
Matrix expand_oracle(const Matrix& g, const std::vector<int>& targets, int qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Matrix out = Matrix::Zero(dim, dim);
  const int k = static_cast<int>(targets.size());
  auto bit = [&](Eigen::Index x, int q) { return static_cast<int>((x >> (qubits - 1 - q)) & 1); };
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      bool others_match = true;
      for (int q = 0; q < qubits; ++q) {
        const bool is_target = std::find(targets.begin(), targets.end(), q) != targets.end();
        if (!is_target && bit(r, q) != bit(c, q)) others_match = false;
      }
      if (!others_match) continue;
      int lr = 0, lc = 0;
      for (int t = 0; t < k; ++t) {
        lr = (lr << 1) | bit(r, targets[static_cast<std::size_t>(t)]);
        lc = (lc << 1) | bit(c, targets[static_cast<std::size_t>(t)]);
      }
      out(r, c) = g(lr, lc);
    }
  }
  return out;
}

DoubledState random_state(int n, std::mt19937_64& rng) {
  Vector v = random_ginibre(Eigen::Index{1} << (2 * n), 1, rng);
  v.normalize();
  return DoubledState(n, v);
}

TEST(ApplyGate, XOnQubitZeroFlipsTheHighBit) {
  DoubledState s(1);
  apply_gate(s, {DenseOperator(single_qubit_operator('X')), {0}});
  // Qubit 0 is the row qubit, the high bit: |00> -> |10>, index 2.
  EXPECT_EQ(s.amplitudes()(2), Complex(1.0));
  EXPECT_EQ(s.amplitudes()(0), Complex(0.0));
}

TEST(ApplyGate, CzPhasesTheAllOnesState) {
  Vector v = Vector::Zero(4);
  v(3) = 1.0;
  DoubledState s(1, v);
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  apply_gate(s, {DenseOperator(cz), {0, 1}});
  EXPECT_EQ(s.amplitudes()(3), Complex(-1.0));
}

TEST(ApplyGate, MatchesExpandedMatrix) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 3; ++n) {
    const int q = 2 * n;
    for (int t = 0; t < 30; ++t) {
      const int k = 1 + t % std::min(4, q);
      std::vector<int> targets(static_cast<std::size_t>(q));
      std::iota(targets.begin(), targets.end(), 0);
      std::shuffle(targets.begin(), targets.end(), rng);
      targets.resize(static_cast<std::size_t>(k));
      const DenseOperator g = random_unitary(k, rng);
      DoubledState s = random_state(n, rng);
      const Vector expect = expand_oracle(g.matrix(), targets, q) * s.amplitudes();
      apply_gate(s, {g, targets});
      EXPECT_LT((s.amplitudes() - expect).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(ApplyGate, DiagonalTwoQubitGate) {
  std::mt19937_64 rng(2);
  Matrix d = Matrix::Identity(4, 4);
  d(1, 1) = std::polar(1.0, 0.3);
  d(3, 3) = std::polar(1.0, -1.2);
  for (const std::vector<int>& targets : {std::vector<int>{0, 3}, std::vector<int>{3, 1}}) {
    DoubledState s = random_state(2, rng);
    const Vector expect = expand_oracle(d, targets, 4) * s.amplitudes();
    apply_gate(s, {DenseOperator(d), targets});
    EXPECT_LT((s.amplitudes() - expect).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ApplyGate, RejectsInvalidGates) {
  std::mt19937_64 rng(3);
  DoubledState s(1);
  EXPECT_THROW(apply_gate(s, {random_unitary(1, rng), {2}}), InvalidArgument);
  EXPECT_THROW(apply_gate(s, {random_unitary(2, rng), {0, 0}}), InvalidArgument);
  EXPECT_THROW(apply_gate(s, {random_unitary(2, rng), {0}}), InvalidArgument);
  EXPECT_THROW(apply_gate(s, {DenseOperator(single_qubit_operator('+')), {0}}), InvalidArgument);
}

TEST(RunCircuit, EmptyCircuitIsVacuum) {
  const HpaCircuit c(2, 0);
  const DoubledState s = run_circuit(c, {});
  EXPECT_EQ(s.amplitudes()(0), Complex(1.0));
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
}

TEST(RunCircuit, XOnEverySiteGivesAllOnesProjector) {
  const int n = 3;
  HpaCircuit c(n, 0);
  for (int s = 0; s < n; ++s) c.append(type1_block(n, DenseOperator(single_qubit_operator('X')), {s}, {s}));
  const DoubledState out = run_circuit(c, {});
  EXPECT_EQ(out.amplitude(7, 7), Complex(1.0));
}

TEST(RunCircuit, MatchesDenseUnitaryAndStaysNormalized) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int n = 1; n <= 3; ++n) {
    HpaCircuit c = layered_ansatz(n, 2);
    if (n >= 2) c.append(type2_block(n, random_unitary(2, rng), 0, n - 1));
    c.append(type3_block(n, random_self_paired_gate(rng), {{0, 0}}));
    for (int t = 0; t < 10; ++t) {
      std::vector<double> theta(static_cast<std::size_t>(c.num_params()));
      for (double& x : theta) x = angle(rng);
      const DoubledState s = run_circuit(c, theta);
      EXPECT_NEAR(s.norm(), 1.0, 1e-12);
      EXPECT_LT((s.amplitudes() - c.unitary(theta).matrix().col(0)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(CompiledCircuit, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  const int n = 2;
  HpaCircuit c = xxz_ansatz(n, 2);
  c.append(type2_block(n, random_unitary(2, rng), 1, 0));
  const CompiledCircuit compiled(c);
  // C = |<target|psi>|^2 with lambda = target <target|psi>.
  const Vector target = random_state(n, rng).amplitudes();
  auto cost = [&](std::span<const double> th) {
    Vector psi;
    compiled.run(th, psi);
    return std::norm(target.dot(psi));
  };
  std::vector<double> theta(static_cast<std::size_t>(c.num_params()));
  for (double& x : theta) x = angle(rng);
  std::vector<double> grad(theta.size());
  const double f = compiled.gradient(
      theta,
      [&](const Vector& psi, Vector& lambda) {
        const Complex o = target.dot(psi);
        lambda = target * o;
        return std::norm(o);
      },
      grad);
  EXPECT_NEAR(f, cost(theta), 1e-14);
  const double h = 1e-6;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    std::vector<double> up = theta, dn = theta;
    up[k] += h;
    dn[k] -= h;
    EXPECT_NEAR(grad[k], (cost(up) - cost(dn)) / (2 * h), 1e-8) << "parameter " << k;
  }
}

TEST(Expectation, Examples) {
  const DoubledState vac(2);
  EXPECT_NEAR(expectation(vac, pauli_string(4, "ZIII")).real(), 1.0, 1e-15);
  EXPECT_NEAR(expectation(vac, pauli_string(1, "Z"), {0}).real(), 1.0, 1e-15);
  std::mt19937_64 rng(6);
  const DoubledState s = random_state(2, rng);
  EXPECT_NEAR(expectation(s, DenseOperator::identity(4)).real(), 1.0, 1e-12);
}

TEST(Expectation, MatchesDenseOracle) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    const DoubledState s = random_state(n, rng);
    const DenseOperator op = random_hermitian(2 * n, rng);
    const Complex dense = s.amplitudes().dot(op.matrix() * s.amplitudes());
    EXPECT_LT(std::abs(expectation(s, op) - dense), 1e-12);
    const DenseOperator local = random_hermitian(1, rng);
    const Complex emb = s.amplitudes().dot(expand_oracle(local.matrix(), {2 * n - 1}, 2 * n) * s.amplitudes());
    EXPECT_LT(std::abs(expectation(s, local, {2 * n - 1}) - emb), 1e-12);
  }
}

TEST(Sample, VacuumAlwaysHitsZero) {
  const std::vector<std::uint64_t> h = sample(DoubledState(1), 1000, 1);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h[0], 1000u);
}

TEST(Sample, BellStateFrequencies) {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const std::uint64_t shots = 100000;
  const std::vector<std::uint64_t> h = sample(DoubledState(1, v), shots, 42);
  // 3 sigma of a binomial with p = 1/2 is about 0.0047; the tolerance is 0.01.
  EXPECT_NEAR(static_cast<double>(h[0]) / shots, 0.5, 0.01);
  EXPECT_NEAR(static_cast<double>(h[3]) / shots, 0.5, 0.01);
  EXPECT_EQ(h[1] + h[2], 0u);
}

TEST(Sample, DeterministicPerSeed) {
  std::mt19937_64 rng(8);
  const DoubledState s = random_state(2, rng);
  EXPECT_EQ(sample(s, 5000, 9), sample(s, 5000, 9));
  EXPECT_NE(sample(s, 5000, 9), sample(s, 5000, 10));
}

TEST(Sample, ChiSquareAgainstBornRule) {
  std::mt19937_64 rng(9);
  const DoubledState s = random_state(1, rng);
  const std::uint64_t shots = 200000;
  const std::vector<std::uint64_t> h = sample(s, shots, 3);
  double chi2 = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double e = std::norm(s.amplitudes()(k)) * shots;
    chi2 += (h[static_cast<std::size_t>(k)] - e) * (h[static_cast<std::size_t>(k)] - e) / e;
  }
  // 3 degrees of freedom; P(chi2 > 16.27) = 0.001.
  EXPECT_LT(chi2, 16.27);
}

}  // namespace
}  // namespace voqe

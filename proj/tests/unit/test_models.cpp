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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "voqe/models.hpp"

namespace voqe {
namespace {

using namespace std::complex_literals;

TEST(DrivenXxz, TwoSiteHamiltonianEntries) {
  const LindbladModel m = driven_xxz(2, 1.0, 1.0);
  const DenseOperator& h = m.hamiltonian;
  EXPECT_TRUE(h.is_hermitian());
  // |01> <-> |10> hopping with amplitude 2.
  EXPECT_NEAR(std::abs(h(1, 2) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(2, 1) - 2.0), 0.0, 1e-15);
  // ZZ on the diagonal.
  EXPECT_NEAR(h(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(h(1, 1).real(), -1.0, 1e-15);
  // Oracle: Z(x)Z + 2 s+(x)s- + 2 s-(x)s+ with s+ = |0><1|.
  const Matrix sp = single_qubit_operator('+'), sm = single_qubit_operator('-');
  const Matrix expect =
      kron(single_qubit_operator('Z'), single_qubit_operator('Z')) + 2.0 * kron(sp, sm) + 2.0 * kron(sm, sp);
  EXPECT_LT(max_abs(h.matrix() - expect), 1e-15);
}

TEST(DrivenXxz, HamiltonianIsRealSymmetric) {
  for (int n = 2; n <= 4; ++n) {
    const Matrix h = driven_xxz(n, 0.7, 3.0).hamiltonian.matrix();
    EXPECT_LT(h.imag().cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(max_abs(h - h.transpose()), 1e-15);
  }
}

TEST(DrivenXxz, JumpsAtTheEnds) {
  const LindbladModel m = driven_xxz(3, 1.0, 5.0);
  ASSERT_EQ(m.jumps.size(), 2u);
  EXPECT_EQ(m.jumps[0].rate, 5.0);
  EXPECT_EQ(m.jumps[1].rate, 5.0);
  EXPECT_LT(max_abs(m.jumps[0].op.matrix() - site_operator(3, 0, '+').matrix()), 1e-15);
  EXPECT_LT(max_abs(m.jumps[1].op.matrix() - site_operator(3, 2, '-').matrix()), 1e-15);
}

TEST(DrivenXxz, PumpingSetsTheSignPattern) {
  const DenseOperator rho = exact_lme_steady_state(build_lindblad_superop(driven_xxz(2, 0.0, 1.0)));
  const double z0 = (pauli_string(2, "ZI").matrix() * rho.matrix()).trace().real();
  const double z1 = (pauli_string(2, "IZ").matrix() * rho.matrix()).trace().real();
  EXPECT_GT(z0, 0.0);
  EXPECT_LT(z1, 0.0);
}

TEST(DrivenXxz, RejectsBadSizes) {
  EXPECT_THROW(driven_xxz(1, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(driven_xxz(kMaxSystemQubits + 1, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(driven_xxz(3, 1.0, -1.0), InvalidArgument);
}

TEST(ImaginaryIsing, ZeroFieldIsHermitian) {
  const NhhModel m = imaginary_ising(3, 0.5, 0.0);
  EXPECT_LT(max_abs(m.gamma.matrix()), 1e-15);
  EXPECT_TRUE(m.effective_hamiltonian().is_hermitian());
}

TEST(ImaginaryIsing, UncoupledTwoSiteSpectrum) {
  const std::vector<NhhEigenpair> eigs = exact_nhh_spectrum(imaginary_ising(2, 0.0, 0.0));
  const double expect[4] = {-1.0, 0.0, 0.0, 1.0};
  ASSERT_EQ(eigs.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(eigs[static_cast<std::size_t>(k)].value.real(), expect[k], 1e-12);
}

TEST(ImaginaryIsing, MatchesWrittenOutOperator) {
  // n = 3 periodic chain: bonds (0,1), (1,2), (2,0).
  const double lambda = 0.5, kappa = 1.3;
  const NhhModel m = imaginary_ising(3, lambda, kappa);
  Matrix expect = Matrix::Zero(8, 8);
  for (const char* z : {"ZII", "IZI", "IIZ"}) expect -= 0.5 * pauli_string(3, z).matrix();
  for (const char* xx : {"XXI", "IXX", "XIX"}) expect -= 0.5 * lambda * pauli_string(3, xx).matrix();
  for (const char* x : {"XII", "IXI", "IIX"}) expect -= 0.5i * kappa * pauli_string(3, x).matrix();
  EXPECT_LT(max_abs(m.effective_hamiltonian().matrix() - expect), 1e-14);
}

TEST(ImaginaryIsing, FieldReversalConjugatesTheSpectrum) {
  for (double kappa : {0.5, 1.0, 2.0}) {
    const std::vector<NhhEigenpair> plus = exact_nhh_spectrum(imaginary_ising(3, 0.5, kappa));
    const std::vector<NhhEigenpair> minus = exact_nhh_spectrum(imaginary_ising(3, 0.5, -kappa));
    for (const NhhEigenpair& e : plus) {
      double best = 1e9;
      for (const NhhEigenpair& f : minus) best = std::min(best, std::abs(f.value - std::conj(e.value)));
      EXPECT_LT(best, 1e-8);
    }
  }
}

TEST(SingleQubitModels, Definitions) {
  const LindbladModel damp = amplitude_damping(2.0);
  ASSERT_EQ(damp.jumps.size(), 1u);
  EXPECT_EQ(damp.jumps[0].rate, 2.0);
  EXPECT_EQ(damp.jumps[0].op(0, 1), Complex(1.0));
  const LindbladModel pump = balanced_pumping(0.5);
  ASSERT_EQ(pump.jumps.size(), 2u);
  EXPECT_EQ(pump.jumps[0].rate, pump.jumps[1].rate);
}

}  // namespace
}  // namespace voqe

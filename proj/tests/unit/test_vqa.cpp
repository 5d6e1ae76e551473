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
#include <random>

#include <gtest/gtest.h>

#include "voqe/models.hpp"
#include "voqe/random.hpp"
#include "voqe/vqa.hpp"

namespace voqe {
namespace {

std::vector<double> random_theta(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::vector<double> theta(static_cast<std::size_t>(count));
  for (double& x : theta) x = angle(rng);
  return theta;
}

Vector unit_vector(const DenseOperator& rho) {
  Vector v = vectorize(rho).amplitudes();
  return v / v.norm();
}

// Checks lambda = dC/dpsi* through the directional derivative
// dC/dh (psi + h d) = 2 Re <lambda, d>.
template <class Cost>
void expect_cotangent(const Cost& cost, const Vector& psi, std::mt19937_64& rng) {
  Vector lambda;
  cost(psi, &lambda);
  for (int t = 0; t < 3; ++t) {
    const Vector d = random_ginibre(psi.size(), 1, rng);
    const double h = 1e-6;
    const double fd = (cost(psi + h * d, nullptr) - cost(psi - h * d, nullptr)) / (2 * h);
    EXPECT_NEAR(2.0 * lambda.dot(d).real(), fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(LmeStateCost, NonNegativeAndZeroOnTheSteadyState) {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 3; ++n) {
    const DenseOperator lhat = build_lindblad_superop(driven_xxz(n, 1.0, 1.0));
    const DenseOperator oracle = exact_lme_steady_state(lhat);
    EXPECT_LT(lme_state_cost(lhat, unit_vector(oracle)), 1e-20);
    for (int t = 0; t < 5; ++t) EXPECT_GT(lme_state_cost(lhat, unit_vector(random_density_matrix(n, rng))), 0.0);
  }
}

TEST(LmeStateCost, ExcitedStateUnderDamping) {
  const LindbladModel m = amplitude_damping(1.0);
  Matrix one = Matrix::Zero(2, 2);
  one(1, 1) = 1.0;
  const DenseOperator rho(one);
  const double expect = apply_lindbladian(m, rho).matrix().squaredNorm();
  EXPECT_NEAR(lme_state_cost(build_lindblad_superop(m), vectorize(rho).amplitudes()), expect, 1e-14);
  // L[|1><1|] = |0><0| - |1><1| at unit rate.
  EXPECT_NEAR(expect, 2.0, 1e-14);
}

TEST(LmeStateCost, CotangentMatchesDirectionalDerivative) {
  std::mt19937_64 rng(2);
  const DenseOperator lhat = build_lindblad_superop(random_lindblad_model(2, rng));
  const Vector psi = unit_vector(random_density_matrix(2, rng));
  expect_cotangent([&](const Vector& p, Vector* l) { return lme_state_cost(lhat, p, l); }, psi, rng);
}

TEST(NhhStateCost, CotangentMatchesDirectionalDerivative) {
  std::mt19937_64 rng(3);
  const NhhModel m = imaginary_ising(2, 0.5, 1.3);
  const DenseOperator base = nhh_superop_base(m);
  const Vector psi = unit_vector(random_density_matrix(2, rng));
  expect_cotangent([&](const Vector& p, Vector* l) { return nhh_state_cost(base, m.gamma, p, l); }, psi, rng);
}

TEST(NhhStateCost, VanishesOnEigenprojectors) {
  for (double kappa : {0.0, 0.5, 1.0}) {
    const NhhModel m = imaginary_ising(3, 0.5, kappa);
    const DenseOperator base = nhh_superop_base(m);
    for (const NhhEigenpair& e : exact_nhh_spectrum(m)) {
      if (e.residual > 1e-10) continue;
      const Vector psi = kron(e.vector, e.vector.conjugate());
      EXPECT_LT(nhh_state_cost(base, m.gamma, psi), 1e-16) << "kappa=" << kappa << " E=" << e.value;
    }
  }
}

TEST(NhhCost, ZeroOnAnEigenstateAndPositiveElsewhere) {
  const NhhModel m{pauli_string(2, "ZI"), DenseOperator(Matrix::Zero(4, 4))};
  const HpaCircuit c = nhh_ansatz(2, 1);
  const std::vector<double> zero(static_cast<std::size_t>(c.num_params()), 0.0);
  // All-zero angles leave |00>, an eigenstate of Z(x)I.
  EXPECT_LT(cost_nhh(c, zero, m), 1e-28);
  std::mt19937_64 rng(12);
  EXPECT_GT(cost_nhh(c, random_theta(c.num_params(), rng), m), 1e-3);
}

TEST(NhhCost, RejectsMixedStateCircuits) {
  const NhhModel m = imaginary_ising(2, 0.5, 1.0);
  EXPECT_THROW(NhhCost(xxz_ansatz(2, 1), m), InvalidArgument);
  EXPECT_THROW(NhhCost(nhh_ansatz(3, 1), m), InvalidArgument);
}

TEST(CostGradients, MatchFiniteDifferences) {
  std::mt19937_64 rng(4);
  const HpaCircuit lc = xxz_ansatz(2, 2);
  const LmeCost lme(lc, build_lindblad_superop(driven_xxz(2, 1.0, 2.0)));
  const HpaCircuit nc = nhh_ansatz(3, 2);
  const NhhCost nhh(nc, imaginary_ising(3, 0.5, 1.0));
  auto check = [&](const auto& cost, int count) {
    const std::vector<double> theta = random_theta(count, rng);
    std::vector<double> grad(theta.size());
    const double f = cost(theta, grad);
    EXPECT_NEAR(f, cost(theta), 1e-13);
    const RealVector fd = gradient([&](std::span<const double> t) { return cost(t); }, theta);
    for (std::size_t k = 0; k < theta.size(); ++k) {
      EXPECT_NEAR(grad[k], fd(static_cast<Eigen::Index>(k)), 1e-6 * std::max(1.0, std::abs(grad[k])))
          << "parameter " << k;
    }
  };
  check(lme, lc.num_params());
  check(nhh, nc.num_params());
}

TEST(Minimize, ReachesTheTwoSiteSteadyState) {
  const LindbladModel model = driven_xxz(2, 1.0, 1.0);
  const DenseOperator lhat = build_lindblad_superop(model);
  const HpaCircuit c = xxz_ansatz(2, 4);
  std::mt19937_64 rng(5);
  const RunRecord rec = minimize(LmeCost(c, lhat), uniform_init(c.num_params(), 0.1, rng));
  EXPECT_LT(rec.final_cost, 1e-8) << rec.status;
  DoubledState s = run_circuit(c, std::vector<double>(rec.theta_final.begin(), rec.theta_final.end()));
  canonicalize_sign(s);
  EXPECT_TRUE(is_density_matrix_state(s, 1e-4));
  const std::vector<double> profile = spin_profile(s);
  const DenseOperator oracle = exact_lme_steady_state(lhat);
  for (int site = 0; site < 2; ++site) {
    const double z = (site_operator(2, site, 'Z').matrix() * oracle.matrix()).trace().real();
    EXPECT_NEAR(profile[static_cast<std::size_t>(site)], z, 1e-3);
  }
}

TEST(AdiabaticSweep, SinglePointIsPlainMinimize) {
  const HpaCircuit c = xxz_ansatz(2, 1);
  const CostFamily family = [&](double eps) -> CostGradFn {
    return LmeCost(c, build_lindblad_superop(driven_xxz(2, 1.0, eps)));
  };
  std::mt19937_64 rng(6);
  const RealVector theta0 = uniform_init(c.num_params(), 0.5, rng);
  MinimizeOptions opt;
  opt.max_iter = 50;
  const std::vector<RunRecord> sweep = adiabatic_sweep(family, {2.0}, theta0, opt);
  const RunRecord direct = minimize(family(2.0), theta0, opt);
  ASSERT_EQ(sweep.size(), 1u);
  EXPECT_EQ(sweep[0].final_cost, direct.final_cost);
  EXPECT_EQ(sweep[0].theta_final, direct.theta_final);
}

TEST(AdiabaticSweep, WarmStartsFromThePreviousPoint) {
  const HpaCircuit c = xxz_ansatz(2, 1);
  const CostFamily family = [&](double eps) -> CostGradFn {
    return LmeCost(c, build_lindblad_superop(driven_xxz(2, 1.0, eps)));
  };
  std::mt19937_64 rng(7);
  MinimizeOptions opt;
  opt.max_iter = 30;
  const std::vector<RunRecord> sweep = adiabatic_sweep(family, {1.0, 1.5, 2.0}, uniform_init(c.num_params(), 0.5, rng), opt);
  ASSERT_EQ(sweep.size(), 3u);
  EXPECT_EQ(sweep[1].theta_init, sweep[0].theta_final);
  EXPECT_EQ(sweep[2].theta_init, sweep[1].theta_final);
  EXPECT_THROW(adiabatic_sweep(family, {}, RealVector::Zero(c.num_params()), opt), InvalidArgument);
}

TEST(ExtractEigenvalue, HermitianPointIsReal) {
  const int n = 2;
  const NhhModel m = imaginary_ising(n, 0.5, 0.0);
  const HpaCircuit c = nhh_ansatz(n, 3);
  const NhhCost cost(c, m);
  const std::vector<NhhEigenpair> spectrum = exact_nhh_spectrum(m);
  std::mt19937_64 rng(8);
  int reliable = 0;
  for (int r = 0; r < 6; ++r) {
    const RunRecord rec = minimize(cost, nhh_restart_init(n, c.num_params(), r, 0.1, rng));
    const std::vector<double> theta(rec.theta_final.begin(), rec.theta_final.end());
    const NhhEigenvalue e = extract_nhh_eigenvalue(c, theta, m);
    EXPECT_EQ(e.cost, rec.final_cost);
    if (!e.reliable) continue;
    ++reliable;
    EXPECT_LT(std::abs(e.value.imag()), 1e-8);
    double best = 1e9;
    for (const NhhEigenpair& p : spectrum) best = std::min(best, std::abs(p.value - e.value));
    EXPECT_LT(best, 1e-4);
  }
  EXPECT_GE(reliable, 3);
}

TEST(ClusterEigenvalues, GreedyInInputOrder) {
  const std::vector<Complex> values = {{1.0, 0.0}, {1.0005, 0.0}, {2.0, 0.5}, {0.9996, 0.0}, {2.0, 0.5}};
  const std::vector<EigenvalueCluster> c = cluster_eigenvalues(values, 1e-3);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].count, 3);
  EXPECT_NEAR(c[0].center.real(), (1.0 + 1.0005 + 0.9996) / 3, 1e-15);
  EXPECT_EQ(c[1].count, 2);
  EXPECT_TRUE(cluster_eigenvalues({}).empty());
}

TEST(Init, UniformRangeAndDeterminism) {
  std::mt19937_64 a(9), b(9);
  const RealVector x = uniform_init(200, 0.3, a);
  EXPECT_EQ(x, uniform_init(200, 0.3, b));
  EXPECT_LE(x.cwiseAbs().maxCoeff(), 0.3);
}

TEST(Init, NhhRestartsCycleThroughThreeKinds) {
  const int n = 3;
  const int count = nhh_ansatz(n, 3).num_params();
  std::mt19937_64 rng(10);
  for (int r : {0, 3, 6}) {
    EXPECT_LE(nhh_restart_init(n, count, r, 0.1, rng).cwiseAbs().maxCoeff(), 0.1) << r;
  }
  bool flipped = false;
  for (int r : {1, 4, 7}) {
    const RealVector flip = nhh_restart_init(n, count, r, 0.1, rng);
    EXPECT_LE(flip.tail(count - 3 * n).cwiseAbs().maxCoeff(), 0.1);
    for (int k = 0; k < 3 * n; ++k) {
      const double v = flip(k);
      const bool near_zero = std::abs(v) <= 0.1;
      const bool near_flip = (k % 3 == 0) && std::abs(v - M_PI / 2) <= 0.1;
      EXPECT_TRUE(near_zero || near_flip) << "parameter " << k;
      flipped = flipped || (near_flip && !near_zero);
    }
  }
  EXPECT_TRUE(flipped);
  const RealVector wide = nhh_restart_init(n, count, 2, 0.1, rng);
  EXPECT_GT(wide.head(3 * n).cwiseAbs().maxCoeff(), 0.1);
  EXPECT_LE(wide.tail(count - 3 * n).cwiseAbs().maxCoeff(), 0.1);
  EXPECT_THROW(nhh_restart_init(n, 3 * n - 1, 0, 0.1, rng), InvalidArgument);
}

TEST(SpinProfile, MatchesTraceOracle) {
  std::mt19937_64 rng(11);
  const DenseOperator rho = random_density_matrix(3, rng);
  const std::vector<double> p = spin_profile(vectorize(rho));
  for (int s = 0; s < 3; ++s) {
    EXPECT_NEAR(p[static_cast<std::size_t>(s)], (site_operator(3, s, 'Z').matrix() * rho.matrix()).trace().real(),
                1e-12);
  }
  const std::vector<double> vac = spin_profile(DoubledState(2));
  EXPECT_EQ(vac, (std::vector<double>{1.0, 1.0}));
}

TEST(CanonicalizeSign, FlipsNegativeTrace) {
  DoubledState s(1);
  s.amplitudes() = -s.amplitudes();
  EXPECT_TRUE(canonicalize_sign(s));
  EXPECT_EQ(s.amplitudes()(0), Complex(1.0));
  EXPECT_FALSE(canonicalize_sign(s));
}

}  // namespace
}  // namespace voqe

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

#include "voqe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include "voqe/estimator.hpp"
#include "voqe/hpa.hpp"
#include "voqe/random.hpp"
#include "voqe/simulator.hpp"
#include "voqe/vectorize.hpp"

namespace voqe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Runs `trials` draws of `violation`; a trial fails when the returned value
// exceeds `tol`. Exceptions count as failures with infinite violation.
VerifyCheck run_check(const std::string& name, int trials, double tol, bool expect_failure,
                      std::mt19937_64& rng, const std::function<double(std::mt19937_64&, int)>& violation) {
  VerifyCheck check{name, trials, 0, 0.0, tol, expect_failure};
  if (expect_failure) check.worst = kInf;
  for (int t = 0; t < trials; ++t) {
    double v = kInf;
    try {
      v = violation(rng, t);
    } catch (const std::exception&) {
    }
    if (!(v <= tol)) ++check.failures;
    // For negative controls the interesting number is the smallest violation.
    check.worst = expect_failure ? std::min(check.worst, v) : std::max(check.worst, v);
  }
  return check;
}

double hermiticity_violation(const DoubledState& state) {
  const Matrix m = devectorize(state).matrix();
  return max_abs(m - m.adjoint());
}

// Row-major flattening of rho, unnormalized: entry (i, j) at i * 2^n + j.
Vector raw_vec(const Matrix& rho) {
  const Matrix t = rho.transpose();
  return Eigen::Map<const Vector>(t.data(), t.size());
}

std::vector<int> distinct_sites(int n, int count, std::mt19937_64& rng) {
  std::vector<int> sites(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sites[static_cast<std::size_t>(i)] = i;
  std::shuffle(sites.begin(), sites.end(), rng);
  sites.resize(static_cast<std::size_t>(count));
  return sites;
}

std::vector<double> random_angles(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::vector<double> theta(static_cast<std::size_t>(count));
  for (double& x : theta) x = angle(rng);
  return theta;
}

// Random mix of rotations and random Type1/2/3 blocks on n sites.
HpaCircuit random_hpa_circuit(int n, std::mt19937_64& rng) {
  const int rotations = 2 * n;
  HpaCircuit circuit(n, 3 * rotations);
  std::uniform_int_distribution<int> site(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  int next = 0;
  for (int layer = 0; layer < 2; ++layer) {
    for (int s = 0; s < n; ++s, next += 3) circuit.append(rotation_block(n, s, next));
    for (int g = 0; g < n; ++g) {
      switch (kind(rng)) {
        case 0: {
          const int k = std::uniform_int_distribution<int>(1, 2)(rng);
          const std::vector<int> sites = distinct_sites(n, k, rng);
          circuit.append(type1_block(n, random_unitary(k, rng), sites, sites));
          break;
        }
        case 1: {
          const std::vector<int> sites = distinct_sites(n, 2, rng);
          circuit.append(type2_block(n, random_unitary(2, rng), sites[0], sites[1]));
          break;
        }
        default: {
          const int s = site(rng);
          circuit.append(type3_block(n, random_self_paired_gate(rng), {Wire{s, s}}));
          break;
        }
      }
    }
  }
  return circuit;
}

}  // namespace

std::vector<VerifyCheck> run_invariant_suite(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(derive_seed({seed, 0x7e51}));
  std::vector<VerifyCheck> checks;
  auto pick_n = [](std::mt19937_64& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); };

  checks.push_back(run_check("type1 blocks satisfy the pairing condition", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 2, 3);
                               const int k = pick_n(r, 1, 2);
                               const std::vector<int> sites = distinct_sites(n, k, r);
                               const HpaBlock b = type1_block(n, random_unitary(k, r), sites, sites);
                               return verify_hpa_condition(b.unitary(), 1e-10).max_violation;
                             }));

  checks.push_back(run_check("type2 blocks satisfy the pairing condition", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 2, 3);
                               const std::vector<int> sites = distinct_sites(n, 2, r);
                               const HpaBlock b = type2_block(n, random_unitary(2, r), sites[0], sites[1]);
                               return verify_hpa_condition(b.unitary(), 1e-10).max_violation;
                             }));

  checks.push_back(run_check("type3 blocks satisfy the pairing condition", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 1, 3);
                               std::vector<Wire> wires;
                               for (int s = 0; s < n; ++s) wires.push_back({s, s});
                               const HpaBlock b = type3_block(n, random_self_paired_gate(r), wires);
                               return verify_hpa_condition(b.unitary(), 1e-10).max_violation;
                             }));

  checks.push_back(run_check("random circuits keep Hermitian states Hermitian", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 2, 3);
                               const HpaCircuit c = random_hpa_circuit(n, r);
                               const std::vector<double> theta = random_angles(c.num_params(), r);
                               const DoubledState in = vectorize(random_hermitian(n, r));
                               const DoubledState out(n, c.unitary(theta).matrix() * in.amplitudes());
                               return hermiticity_violation(out);
                             }));

  checks.push_back(run_check("compiled circuit matches the dense unitary", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 1, 3);
                               const HpaCircuit c = layered_ansatz(n, 2);
                               const std::vector<double> theta = random_angles(c.num_params(), r);
                               Vector fast;
                               CompiledCircuit(c).run(theta, fast);
                               const Vector dense = c.unitary(theta).matrix().col(0);
                               return (fast - dense).cwiseAbs().maxCoeff();
                             }));

  // Negative control: a trial "fails" when it breaks Hermiticity, which is
  // what identical (unconjugated) partner rotations must do.
  checks.push_back(run_check("unconjugated partner rotations break Hermiticity", trials, 1e-6, true, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 2, 3);
                               const HpaCircuit c = xxz_ansatz(n, 1, {}, Pairing::kIdentical);
                               const std::vector<double> theta = random_angles(c.num_params(), r);
                               const DoubledState in = vectorize(random_density_matrix(n, r));
                               const DoubledState out(n, c.unitary(theta).matrix() * in.amplitudes());
                               return hermiticity_violation(out);
                             }));

  checks.push_back(run_check("superoperator matches the matrix-form Lindbladian", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 1, 3);
                               const LindbladModel model = random_lindblad_model(n, r);
                               const Matrix rho = random_density_matrix(n, r).matrix();
                               const Vector lhs = build_lindblad_superop(model).matrix() * raw_vec(rho);
                               const Vector rhs = raw_vec(apply_lindbladian(model, DenseOperator(rho)).matrix());
                               return (lhs - rhs).cwiseAbs().maxCoeff();
                             }));

  checks.push_back(run_check("Lindbladian preserves the trace", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 1, 3);
                               const LindbladModel model = random_lindblad_model(n, r);
                               const Matrix rho = random_density_matrix(n, r).matrix();
                               const Vector out = build_lindblad_superop(model).matrix() * raw_vec(rho);
                               const Eigen::Index side = Eigen::Index{1} << n;
                               Complex trace = 0.0;
                               for (Eigen::Index i = 0; i < side; ++i) trace += out(i * side + i);
                               return std::abs(trace);
                             }));

  // Relative to the largest eigenvalue, since |L|^2 grows with the rates.
  checks.push_back(run_check("L^dag L is positive semidefinite", trials, 1e-10, false, rng,
                             [&](std::mt19937_64& r, int) {
                               const int n = pick_n(r, 1, 2);
                               const Matrix l = build_lindblad_superop(random_lindblad_model(n, r)).matrix();
                               const HermitianEigen eig = eig_hermitian(Matrix(l.adjoint() * l), 1e-8);
                               const double top = std::max(1.0, eig.values.maxCoeff());
                               return std::max(0.0, -eig.values.minCoeff() / top);
                             }));

  checks.push_back(run_check("uniform superposition has eta = 2^-n", std::min(trials, 4), 1e-12, false, rng,
                             [&](std::mt19937_64&, int t) {
                               const int n = 1 + t % 4;
                               const Eigen::Index side = Eigen::Index{1} << n;
                               const Matrix plus = Matrix::Constant(side, side, 1.0 / static_cast<double>(side));
                               const double eta = diagonal_weight(vectorize(DenseOperator(plus)));
                               return std::abs(eta - std::ldexp(1.0, -n));
                             }));

  return checks;
}

std::string format_verify_table(const std::vector<VerifyCheck>& checks) {
  std::size_t width = 5;
  for (const VerifyCheck& c : checks) width = std::max(width, c.name.size());
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %6s  %8s  %10s  %10s  %s\n", static_cast<int>(width), "check", "trials",
                "failures", "worst", "tol", "result");
  out += line;
  for (const VerifyCheck& c : checks) {
    std::snprintf(line, sizeof line, "%-*s  %6d  %8d  %10.3g  %10.3g  %s%s\n", static_cast<int>(width),
                  c.name.c_str(), c.trials, c.failures, c.worst, c.tol, c.passed() ? "PASS" : "FAIL",
                  c.expect_failure ? " (negative control)" : "");
    out += line;
  }
  return out;
}

}  // namespace voqe

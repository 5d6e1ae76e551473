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

// Variational steady-state costs and the drivers around them.
//
//   C_L(theta) = |L psi(theta)|^2                      (Lindblad)
//   C_n(theta) = |N[t] psi(theta)|^2,  t = tr[G rho]    (non-Hermitian H - iG)
//
// Both are evaluated exactly on the statevector. Gradients come from the
// reverse-mode sweep in CompiledCircuit; `gradient` in optimizer.hpp is the
// finite-difference reference they are tested against.

#pragma once

#include <random>
#include <vector>

#include "voqe/optimizer.hpp"
#include "voqe/simulator.hpp"
#include "voqe/superop.hpp"

namespace voqe {

/// |L psi|^2 and, optionally, its cotangent lambda = L^dag L psi.
double lme_state_cost(const DenseOperator& lhat, const Vector& psi, Vector* lambda = nullptr);

/// |N[t] psi|^2 with t = Re sum_ij G_ji psi_ij recomputed from psi. The
/// cotangent includes the dependence of t on psi:
/// lambda = N^dag N psi + 2 Re<N psi|psi> g with g_ij = G_ij.
double nhh_state_cost(const DenseOperator& base, const DenseOperator& gamma, const Vector& psi,
                      Vector* lambda = nullptr);

class LmeCost {
 public:
  LmeCost(const HpaCircuit& circuit, DenseOperator lhat);

  double operator()(std::span<const double> theta) const;
  double operator()(std::span<const double> theta, std::span<double> grad) const;
  const CompiledCircuit& compiled() const { return compiled_; }

 private:
  CompiledCircuit compiled_;
  DenseOperator lhat_;
};

class NhhCost {
 public:
  /// Rejects circuits containing Type2 or Type3 blocks.
  NhhCost(const HpaCircuit& circuit, const NhhModel& model);

  double operator()(std::span<const double> theta) const;
  double operator()(std::span<const double> theta, std::span<double> grad) const;
  const CompiledCircuit& compiled() const { return compiled_; }

 private:
  CompiledCircuit compiled_;
  DenseOperator base_;
  DenseOperator gamma_;
};

double cost_lme(const HpaCircuit& circuit, std::span<const double> theta, const DenseOperator& lhat);
double cost_nhh(const HpaCircuit& circuit, std::span<const double> theta, const NhhModel& model);

/// Exact <Z_site> of the (trace-normalized) density matrix held by `state`.
std::vector<double> spin_profile(const DoubledState& state);

/// Flips the sign of a state whose devectorized trace is negative, so that a
/// null vector found as -rho reads as rho. Returns true if flipped.
bool canonicalize_sign(DoubledState& state);

/// A cost family indexed by a sweep variable (epsilon, kappa, ...).
using CostFamily = std::function<CostGradFn(double s)>;

/// Minimizes at each schedule point in order; the first starts from theta0,
/// later ones from the previous point's best parameters.
std::vector<RunRecord> adiabatic_sweep(const CostFamily& family, const std::vector<double>& schedule,
                                       const RealVector& theta0, const MinimizeOptions& options = {});

/// Costs below this are accepted as eigenstates.
inline constexpr double kNhhAcceptCost = 1e-8;

struct NhhEigenvalue {
  Complex value;
  double cost = 0.0;
  bool reliable = false;  // cost < kNhhAcceptCost
};

/// E = tr[(H - iG) rho] for the pure state rho prepared by the circuit.
NhhEigenvalue extract_nhh_eigenvalue(const HpaCircuit& circuit, std::span<const double> theta,
                                     const NhhModel& model);

struct EigenvalueCluster {
  Complex center;  // mean of the members
  int count = 0;
};

/// Greedy clustering in input order: a value joins the first cluster whose
/// first member lies within `radius`.
std::vector<EigenvalueCluster> cluster_eigenvalues(const std::vector<Complex>& values, double radius = 1e-3);

/// theta ~ uniform(-half_width, half_width).
RealVector uniform_init(int count, double half_width, std::mt19937_64& rng);

/// Restart initialization for the eigenstate search on an ansatz built by
/// nhh_ansatz / xxz_ansatz (first 3n parameters drive the first rotation
/// layer). All parameters start in uniform(-half_width, half_width), which is
/// the whole story for restart % 3 == 0. For restart % 3 == 1, pi/2 is added
/// to the X angle of a random subset of sites (a random computational basis
/// state). For restart % 3 == 2 the first layer is redrawn from
/// uniform(-pi, pi) (a random product state).
RealVector nhh_restart_init(int n, int count, int restart, double half_width, std::mt19937_64& rng);

}  // namespace voqe

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

#include "voqe/vqa.hpp"

#include <cmath>
#include <numbers>

#include "voqe/kernels.hpp"

namespace voqe {

namespace {

void check_dim(const DenseOperator& op, const Vector& psi) {
  if (op.dim() != psi.size()) throw InvalidArgument("superoperator dimension does not match the state");
}

Vector apply(const DenseOperator& op, const Vector& x) {
  Vector y(op.dim());
  const auto n = static_cast<std::size_t>(op.dim());
  kernels::active().matvec(op.matrix().data(), n, n, x.data(), y.data());
  return y;
}

Vector apply_adjoint(const DenseOperator& op, const Vector& x) {
  Vector y(op.dim());
  const auto n = static_cast<std::size_t>(op.dim());
  kernels::active().adjoint_matvec(op.matrix().data(), n, n, x.data(), y.data());
  return y;
}

// t = Re sum_ij G_ji psi_ij, the trace tr[G M] of the devectorized psi.
double trace_gamma(const DenseOperator& gamma, const Vector& psi) {
  const Eigen::Index side = gamma.dim();
  Complex t = 0.0;
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j) t += gamma(j, i) * psi(i * side + j);
  return t.real();
}

}  // namespace

double lme_state_cost(const DenseOperator& lhat, const Vector& psi, Vector* lambda) {
  check_dim(lhat, psi);
  const Vector lpsi = apply(lhat, psi);
  if (lambda) *lambda = apply_adjoint(lhat, lpsi);
  return lpsi.squaredNorm();
}

double nhh_state_cost(const DenseOperator& base, const DenseOperator& gamma, const Vector& psi, Vector* lambda) {
  check_dim(base, psi);
  if (gamma.dim() * gamma.dim() != psi.size()) throw InvalidArgument("decay operator does not match the state");
  const double t = trace_gamma(gamma, psi);
  Vector npsi = apply(base, psi);
  npsi += (2.0 * t) * psi;
  if (lambda) {
    *lambda = apply_adjoint(base, npsi);
    *lambda += (2.0 * t) * npsi;
    const double coupling = 2.0 * npsi.dot(psi).real();
    const Eigen::Index side = gamma.dim();
    for (Eigen::Index i = 0; i < side; ++i)
      for (Eigen::Index j = 0; j < side; ++j) (*lambda)(i * side + j) += coupling * gamma(i, j);
  }
  return npsi.squaredNorm();
}

LmeCost::LmeCost(const HpaCircuit& circuit, DenseOperator lhat) : compiled_(circuit), lhat_(std::move(lhat)) {
  if (lhat_.dim() != (Eigen::Index{1} << (2 * circuit.n()))) {
    throw InvalidArgument("superoperator dimension does not match the circuit register");
  }
}

double LmeCost::operator()(std::span<const double> theta) const {
  Vector psi;
  compiled_.run(theta, psi);
  return lme_state_cost(lhat_, psi);
}

double LmeCost::operator()(std::span<const double> theta, std::span<double> grad) const {
  return compiled_.gradient(
      theta, [this](const Vector& psi, Vector& lam) { return lme_state_cost(lhat_, psi, &lam); }, grad);
}

NhhCost::NhhCost(const HpaCircuit& circuit, const NhhModel& model)
    : compiled_(circuit), base_(nhh_superop_base(model)), gamma_(model.gamma) {
  if (!circuit.type1_only()) throw InvalidArgument("nHH cost needs a Type1-only circuit (pure trial states)");
  if (model.qubits() != circuit.n()) throw InvalidArgument("model size does not match the circuit");
}

double NhhCost::operator()(std::span<const double> theta) const {
  Vector psi;
  compiled_.run(theta, psi);
  return nhh_state_cost(base_, gamma_, psi);
}

double NhhCost::operator()(std::span<const double> theta, std::span<double> grad) const {
  return compiled_.gradient(
      theta, [this](const Vector& psi, Vector& lam) { return nhh_state_cost(base_, gamma_, psi, &lam); }, grad);
}

double cost_lme(const HpaCircuit& circuit, std::span<const double> theta, const DenseOperator& lhat) {
  return LmeCost(circuit, lhat)(theta);
}

double cost_nhh(const HpaCircuit& circuit, std::span<const double> theta, const NhhModel& model) {
  return NhhCost(circuit, model)(theta);
}

std::vector<double> spin_profile(const DoubledState& state) {
  const DenseOperator rho = to_density_matrix(state);
  const int n = state.n();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double p = rho(i, i).real();
    for (int s = 0; s < n; ++s) out[static_cast<std::size_t>(s)] += ((i >> (n - 1 - s)) & 1) ? -p : p;
  }
  return out;
}

bool canonicalize_sign(DoubledState& state) {
  Complex tr = 0.0;
  for (Eigen::Index i = 0; i < state.side(); ++i) tr += state.amplitude(i, i);
  if (tr.real() >= 0.0) return false;
  state.amplitudes() = -state.amplitudes();
  return true;
}

std::vector<RunRecord> adiabatic_sweep(const CostFamily& family, const std::vector<double>& schedule,
                                       const RealVector& theta0, const MinimizeOptions& options) {
  if (schedule.empty()) throw InvalidArgument("adiabatic_sweep: empty schedule");
  std::vector<RunRecord> out;
  RealVector theta = theta0;
  for (double s : schedule) {
    RunRecord rec = minimize(family(s), theta, options);
    theta = rec.theta_final;
    out.push_back(std::move(rec));
  }
  return out;
}

NhhEigenvalue extract_nhh_eigenvalue(const HpaCircuit& circuit, std::span<const double> theta,
                                     const NhhModel& model) {
  NhhEigenvalue out;
  out.cost = cost_nhh(circuit, theta, model);
  out.reliable = out.cost < kNhhAcceptCost;
  const DenseOperator rho = to_density_matrix(run_circuit(circuit, theta));
  out.value = (model.effective_hamiltonian().matrix() * rho.matrix()).trace();
  return out;
}

std::vector<EigenvalueCluster> cluster_eigenvalues(const std::vector<Complex>& values, double radius) {
  std::vector<Complex> first;
  std::vector<EigenvalueCluster> out;
  for (const Complex& v : values) {
    std::size_t c = 0;
    while (c < first.size() && std::abs(v - first[c]) > radius) ++c;
    if (c == first.size()) {
      first.push_back(v);
      out.push_back({0.0, 0});
    }
    out[c].center += v;
    out[c].count += 1;
  }
  for (auto& c : out) c.center /= static_cast<double>(c.count);
  return out;
}

RealVector uniform_init(int count, double half_width, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  RealVector theta(count);
  for (int k = 0; k < count; ++k) theta(k) = u(rng);
  return theta;
}

RealVector nhh_restart_init(int n, int count, int restart, double half_width, std::mt19937_64& rng) {
  if (count < 3 * n) throw InvalidArgument("nhh_restart_init: circuit has fewer than 3n parameters");
  RealVector theta = uniform_init(count, half_width, rng);
  // Cold starts alone find the low-lying eigenstates and miss the rest; the
  // other two kinds spread the restarts over the remaining basins.
  if (restart % 3 == 1) {
    std::bernoulli_distribution flip(0.5);
    for (int q = 0; q < n; ++q) {
      if (flip(rng)) theta(3 * q) += std::numbers::pi / 2.0;
    }
  } else if (restart % 3 == 2) {
    std::uniform_real_distribution<double> wide(-std::numbers::pi, std::numbers::pi);
    for (int k = 0; k < 3 * n; ++k) theta(k) = wide(rng);
  }
  return theta;
}

}  // namespace voqe

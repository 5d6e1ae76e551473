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

#include "voqe/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "voqe/kernels.hpp"

namespace voqe {

namespace {

std::size_t stride_of(int qubit, int total_qubits) {
  return std::size_t{1} << (total_qubits - 1 - qubit);
}

void check_targets(const std::vector<int>& targets, int total_qubits) {
  std::uint64_t seen = 0;
  for (int t : targets) {
    if (t < 0 || t >= total_qubits) throw InvalidArgument("gate target " + std::to_string(t) + " out of range");
    if (seen & (std::uint64_t{1} << t)) throw InvalidArgument("duplicate gate target " + std::to_string(t));
    seen |= std::uint64_t{1} << t;
  }
}

// k-qubit gate by gather/scatter; first target is the high bit of the local index.
void apply_general(Complex* amp, std::size_t len, int total_qubits, const std::vector<int>& targets,
                   const Matrix& m) {
  const std::size_t k = targets.size();
  const std::size_t local_dim = std::size_t{1} << k;
  std::vector<std::size_t> offset(local_dim, 0);
  std::size_t mask = 0;
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (std::size_t b = 0; b < k; ++b) {
      if (l & (std::size_t{1} << (k - 1 - b))) offset[l] |= stride_of(targets[b], total_qubits);
    }
  }
  for (int t : targets) mask |= stride_of(t, total_qubits);
  std::vector<Complex> in(local_dim);
  for (std::size_t base = 0; base < len; ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < local_dim; ++l) in[l] = amp[base + offset[l]];
    for (std::size_t r = 0; r < local_dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < local_dim; ++c) acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      amp[base + offset[r]] = acc;
    }
  }
}

std::vector<Complex> row_major(const Matrix& m) {
  std::vector<Complex> out(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
  return out;
}

bool is_diagonal(const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != Complex(0.0)) return false;
  return true;
}

std::array<double, 3> bound_angles(const EulerBinding& e, std::span<const double> theta) {
  return {e.sign[0] * theta[static_cast<std::size_t>(e.index[0])],
          e.sign[1] * theta[static_cast<std::size_t>(e.index[1])],
          e.sign[2] * theta[static_cast<std::size_t>(e.index[2])]};
}

}  // namespace

void apply_gate(DoubledState& state, const GateApplication& gate) {
  const int total = state.register_qubits();
  const int k = static_cast<int>(gate.targets.size());
  if (k < 1 || k > 4) throw InvalidArgument("apply_gate supports 1 to 4 target qubits");
  check_targets(gate.targets, total);
  if (gate.matrix.qubits() != k) throw InvalidArgument("apply_gate: matrix size does not match target count");
  if (!gate.matrix.is_unitary(kDefaultTol)) throw InvalidArgument("apply_gate: matrix is not unitary");

  const auto& kt = kernels::active();
  const auto len = static_cast<std::size_t>(state.size());
  if (k == 1) {
    const auto m = row_major(gate.matrix.matrix());
    kt.apply_1q(state.data(), len, stride_of(gate.targets[0], total), m.data());
  } else if (k == 2) {
    const auto m = row_major(gate.matrix.matrix());
    kt.apply_2q(state.data(), len, stride_of(gate.targets[0], total), stride_of(gate.targets[1], total), m.data());
  } else {
    apply_general(state.data(), len, total, gate.targets, gate.matrix.matrix());
  }
}

CompiledCircuit::CompiledCircuit(const HpaCircuit& circuit) : n_(circuit.n()), num_params_(circuit.num_params()) {
  const int total = 2 * n_;
  for (const auto& block : circuit.blocks()) {
    for (const auto& g : block.gates) {
      check_targets(g.targets, total);
      Op op{};
      if (g.euler) {
        if (g.targets.size() != 1) throw InvalidArgument("parameterized gates must act on one qubit");
        op.kind = Op::Kind::kOneQubit;
        op.stride_hi = stride_of(g.targets[0], total);
        op.parameterized = true;
        op.euler = *g.euler;
      } else if (g.targets.size() == 1) {
        op.kind = Op::Kind::kOneQubit;
        op.stride_hi = stride_of(g.targets[0], total);
        op.fixed = g.fixed;
        op.data = row_major(g.fixed);
      } else if (g.targets.size() == 2) {
        op.stride_hi = stride_of(g.targets[0], total);
        op.stride_lo = stride_of(g.targets[1], total);
        op.fixed = g.fixed;
        if (is_diagonal(g.fixed)) {
          op.kind = Op::Kind::kDiagTwoQubit;
          op.data = {g.fixed(0, 0), g.fixed(1, 1), g.fixed(2, 2), g.fixed(3, 3)};
        } else {
          op.kind = Op::Kind::kTwoQubit;
          op.data = row_major(g.fixed);
        }
      } else {
        op.kind = Op::Kind::kGeneral;
        op.targets = g.targets;
        op.fixed = g.fixed;
      }
      ops_.push_back(std::move(op));
    }
  }
}

void CompiledCircuit::apply(const Op& op, std::span<const double> theta, Vector& amps, bool dagger) const {
  const auto& kt = kernels::active();
  const auto len = static_cast<std::size_t>(amps.size());
  switch (op.kind) {
    case Op::Kind::kOneQubit: {
      Complex m[4];
      if (op.parameterized) {
        const auto a = bound_angles(op.euler, theta);
        const Matrix g = euler_matrix(a[0], a[1], a[2]);
        m[0] = g(0, 0), m[1] = g(0, 1), m[2] = g(1, 0), m[3] = g(1, 1);
      } else {
        std::copy(op.data.begin(), op.data.end(), m);
      }
      if (dagger) {
        std::swap(m[1], m[2]);
        for (auto& v : m) v = std::conj(v);
      }
      kt.apply_1q(amps.data(), len, op.stride_hi, m);
      break;
    }
    case Op::Kind::kTwoQubit: {
      if (!dagger) {
        kt.apply_2q(amps.data(), len, op.stride_hi, op.stride_lo, op.data.data());
      } else {
        const auto m = row_major(op.fixed.adjoint());
        kt.apply_2q(amps.data(), len, op.stride_hi, op.stride_lo, m.data());
      }
      break;
    }
    case Op::Kind::kDiagTwoQubit: {
      Complex d[4];
      for (int i = 0; i < 4; ++i) d[i] = dagger ? std::conj(op.data[static_cast<std::size_t>(i)]) : op.data[static_cast<std::size_t>(i)];
      kt.apply_diag_2q(amps.data(), len, op.stride_hi, op.stride_lo, d);
      break;
    }
    case Op::Kind::kGeneral:
      apply_general(amps.data(), len, 2 * n_, op.targets, dagger ? Matrix(op.fixed.adjoint()) : op.fixed);
      break;
  }
}

void CompiledCircuit::run(std::span<const double> theta, Vector& amps) const {
  if (theta.size() != static_cast<std::size_t>(num_params_)) {
    throw InvalidArgument("parameter vector has " + std::to_string(theta.size()) + " entries, circuit needs " +
                          std::to_string(num_params_));
  }
  amps = Vector::Zero(Eigen::Index{1} << (2 * n_));
  amps(0) = 1.0;
  for (const Op& op : ops_) apply(op, theta, amps, false);
}

double CompiledCircuit::gradient(std::span<const double> theta, const Cotangent& cotangent,
                                 std::span<double> grad) const {
  using namespace std::complex_literals;
  if (grad.size() != static_cast<std::size_t>(num_params_)) throw InvalidArgument("gradient buffer size mismatch");
  Vector psi;
  run(theta, psi);
  Vector lam(psi.size());
  const double cost = cotangent(psi, lam);
  std::fill(grad.begin(), grad.end(), 0.0);

  const auto& kt = kernels::active();
  const Matrix x = single_qubit_operator('X');
  const Matrix y = single_qubit_operator('Y');
  const Matrix z = single_qubit_operator('Z');
  const auto len = static_cast<std::size_t>(psi.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    const Op& op = *it;
    apply(op, theta, psi, true);
    if (op.parameterized) {
      Complex r[4];
      kt.pair_correlation_1q(lam.data(), psi.data(), len, op.stride_hi, r);
      const auto a = bound_angles(op.euler, theta);
      const Matrix rx = euler_matrix(a[0], 0.0, 0.0);
      const Matrix ry = euler_matrix(0.0, a[1], 0.0);
      const Matrix rz = euler_matrix(0.0, 0.0, a[2]);
      const Matrix g = rx * ry * rz;
      const Matrix d[3] = {-1.0i * x * g, rx * (-1.0i * y) * ry * rz, g * (-1.0i * z)};
      for (int k = 0; k < 3; ++k) {
        const Complex overlap = d[k](0, 0) * r[0] + d[k](0, 1) * r[1] + d[k](1, 0) * r[2] + d[k](1, 1) * r[3];
        grad[static_cast<std::size_t>(op.euler.index[k])] += 2.0 * op.euler.sign[k] * overlap.real();
      }
    }
    apply(op, theta, lam, true);
  }
  return cost;
}

DoubledState run_circuit(const HpaCircuit& circuit, std::span<const double> theta) {
  const CompiledCircuit compiled(circuit);
  Vector amps;
  compiled.run(theta, amps);
  return DoubledState(circuit.n(), std::move(amps));
}

Complex expectation(const DoubledState& state, const DenseOperator& op) {
  if (op.dim() != state.size()) throw InvalidArgument("expectation: operator dimension does not match state");
  return state.amplitudes().dot(op.matrix() * state.amplitudes());
}

Complex expectation(const DoubledState& state, const DenseOperator& op, const std::vector<int>& targets) {
  const int total = state.register_qubits();
  if (op.qubits() != static_cast<int>(targets.size())) {
    throw InvalidArgument("expectation: operator size does not match target count");
  }
  check_targets(targets, total);
  Vector applied = state.amplitudes();
  apply_general(applied.data(), static_cast<std::size_t>(applied.size()), total, targets, op.matrix());
  return state.amplitudes().dot(applied);
}

std::vector<std::uint64_t> sample(const DoubledState& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidArgument("sample: shots must be positive");
  const auto dim = static_cast<std::size_t>(state.size());
  std::vector<double> cdf(dim);
  double total = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    total += std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
    cdf[i] = total;
  }
  if (!(total > 0.0)) throw InvalidArgument("sample: state has zero norm");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, total);
  std::vector<std::uint64_t> hist(dim, 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    auto pos = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), uniform(rng)) - cdf.begin());
    // A draw can land on `total` itself through rounding; skip trailing zero-weight entries.
    pos = std::min(pos, dim - 1);
    while (pos > 0 && cdf[pos] == cdf[pos - 1]) --pos;
    ++hist[pos];
  }
  return hist;
}

}  // namespace voqe

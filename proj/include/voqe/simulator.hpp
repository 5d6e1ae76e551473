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

// Statevector simulation of the 2n-qubit doubled register.
//
// Register qubit q has basis-index stride 2^(2n - 1 - q): qubit 0 is the most
// significant bit, row-subsystem qubits are 0..n-1 and column-subsystem
// qubits are n..2n-1, matching the (i, j) -> i * 2^n + j layout of vectorize.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "voqe/hpa.hpp"
#include "voqe/vectorize.hpp"

namespace voqe {

struct GateApplication {
  DenseOperator matrix;  // k <= 4 qubits, unitary
  std::vector<int> targets;
};

/// Applies a validated gate in place. Throws on out-of-range or duplicate
/// targets, on a size mismatch and on a non-unitary matrix.
void apply_gate(DoubledState& state, const GateApplication& gate);

/// A circuit lowered to kernel calls. Immutable after construction, so one
/// instance can serve concurrent evaluations at different parameters.
class CompiledCircuit {
 public:
  explicit CompiledCircuit(const HpaCircuit& circuit);

  int n() const { return n_; }
  int num_params() const { return num_params_; }

  /// Overwrites `amps` with circuit(theta)|0...0>.
  void run(std::span<const double> theta, Vector& amps) const;

  /// Gradient of a real cost C(psi) by reverse-mode sweep. `cotangent` maps
  /// the output state psi to lambda = dC/d(conj psi), so that
  /// dC/dtheta_k = 2 Re <lambda| d psi / d theta_k>. Returns C.
  using Cotangent = std::function<double(const Vector& psi, Vector& lambda)>;
  double gradient(std::span<const double> theta, const Cotangent& cotangent, std::span<double> grad) const;

 private:
  struct Op {
    enum class Kind { kOneQubit, kTwoQubit, kDiagTwoQubit, kGeneral } kind;
    std::size_t stride_hi = 0;
    std::size_t stride_lo = 0;
    std::vector<int> targets;  // kGeneral only
    Matrix fixed;              // row-major data is copied into `data`
    std::vector<Complex> data;
    bool parameterized = false;
    EulerBinding euler;
  };

  void apply(const Op& op, std::span<const double> theta, Vector& amps, bool dagger) const;

  int n_ = 0;
  int num_params_ = 0;
  std::vector<Op> ops_;
};

/// circuit(theta)|0...0> as a doubled state.
DoubledState run_circuit(const HpaCircuit& circuit, std::span<const double> theta);

/// <state| op |state> with `op` on the whole 2n-qubit register.
Complex expectation(const DoubledState& state, const DenseOperator& op);

/// <state| op |state> with `op` acting on the listed register qubits.
Complex expectation(const DoubledState& state, const DenseOperator& op, const std::vector<int>& targets);

/// Histogram (length 4^n) of `shots` i.i.d. computational-basis samples drawn
/// from |amplitude|^2 / norm^2 with a seeded std::mt19937_64.
std::vector<std::uint64_t> sample(const DoubledState& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace voqe

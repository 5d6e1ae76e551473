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

#include "voqe/estimator.hpp"

#include <cmath>

#include "voqe/simulator.hpp"

namespace voqe {

namespace {

constexpr char kPauliLabels[4] = {'I', 'X', 'Y', 'Z'};

// rho -> V^dag rho V on the devectorized matrix; equals (V^dag (x) V^T)|rho>.
DoubledState rotate(const DoubledState& state, const Matrix& v) {
  const Eigen::Index side = state.side();
  Matrix m = Eigen::Map<const Matrix>(state.data(), side, side).transpose();
  Matrix rotated = v.adjoint() * m * v;
  Vector amps(side * side);
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j) amps(i * side + j) = rotated(i, j);
  return DoubledState(state.n(), std::move(amps));
}

PostselectResult estimate_in_basis(const DoubledState& state, const Matrix& v, const RealVector& o_values,
                                   std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidArgument("postselect_estimate: shots must be positive");
  const DoubledState rotated = rotate(state, v);
  const auto hist = sample(rotated, shots, seed);
  const Eigen::Index side = state.side();
  double num = 0.0, den = 0.0;
  std::uint64_t retained = 0;
  for (Eigen::Index i = 0; i < side; ++i) {
    const std::uint64_t m = hist[static_cast<std::size_t>(i * side + i)];
    retained += m;
    const double root = std::sqrt(static_cast<double>(m));
    num += root * o_values(i);
    den += root;
  }
  if (retained == 0) {
    throw PostselectionStarved("post-selection kept 0 of " + std::to_string(shots) + " shots");
  }
  PostselectResult out;
  out.estimate = num / den;
  out.retained = retained;
  out.eta_hat = static_cast<double>(retained) / static_cast<double>(shots);
  out.low_confidence = retained < kLowConfidenceRetained;
  return out;
}

void check_observable(const DoubledState& state, const DenseOperator& o) {
  if (o.qubits() != state.n()) throw InvalidArgument("observable must act on the n system qubits");
  if (!o.is_hermitian(kDefaultTol)) throw InvalidArgument("observable must be Hermitian");
}

// Eigenbasis of a Pauli string as a product of single-qubit bases.
void pauli_basis(const std::string& labels, Matrix& v, RealVector& values) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::sqrt(2.0);
  v = Matrix::Ones(1, 1);
  values = RealVector::Ones(1);
  for (char c : labels) {
    Matrix local(2, 2);
    RealVector ev(2);
    switch (c) {
      case 'I':
        local << 1.0, 0.0, 0.0, 1.0;
        ev << 1.0, 1.0;
        break;
      case 'Z':
        local << 1.0, 0.0, 0.0, 1.0;
        ev << 1.0, -1.0;
        break;
      case 'X':
        local << r, r, r, -r;
        ev << 1.0, -1.0;
        break;
      case 'Y':
        local << r, r, 1.0i * r, -1.0i * r;
        ev << 1.0, -1.0;
        break;
      default:
        throw InvalidArgument(std::string("unknown Pauli label '") + c + "'");
    }
    v = kron(v, local);
    RealVector next(values.size() * 2);
    for (Eigen::Index a = 0; a < values.size(); ++a) {
      next(2 * a) = values(a) * ev(0);
      next(2 * a + 1) = values(a) * ev(1);
    }
    values = next;
  }
}

}  // namespace

DenseOperator PauliDecomposition::reconstruct(int n) const {
  DenseOperator out = DenseOperator::zero(n);
  for (const auto& t : terms) out += Complex(t.coefficient) * pauli_string(n, t.labels);
  return out;
}

PauliDecomposition pauli_decompose(const DenseOperator& o, double drop_below) {
  if (!o.is_hermitian(kDefaultTol)) throw InvalidArgument("pauli_decompose: operator must be Hermitian");
  const int n = o.qubits();
  if (n < 1) throw InvalidArgument("pauli_decompose: need at least one qubit");
  const std::size_t dim = std::size_t{1} << n;
  const Matrix& m = o.matrix();
  const Matrix pauli[4] = {single_qubit_operator('I'), single_qubit_operator('X'), single_qubit_operator('Y'),
                           single_qubit_operator('Z')};
  PauliDecomposition out;
  std::string labels(static_cast<std::size_t>(n), 'I');
  const std::size_t count = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t flip = 0;
    for (int s = 0; s < n; ++s) {
      const std::size_t p = (code >> (2 * (n - 1 - s))) & 3;
      labels[static_cast<std::size_t>(s)] = kPauliLabels[p];
      if (p == 1 || p == 2) flip |= std::size_t{1} << (n - 1 - s);
    }
    // tr[P O] = sum_r P(r, r ^ flip) O(r ^ flip, r); P has one entry per row.
    Complex tr = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      const std::size_t c = r ^ flip;
      Complex entry = 1.0;
      for (int s = 0; s < n; ++s) {
        const std::size_t p = (code >> (2 * (n - 1 - s))) & 3;
        const int bit_r = static_cast<int>((r >> (n - 1 - s)) & 1);
        const int bit_c = static_cast<int>((c >> (n - 1 - s)) & 1);
        entry *= pauli[p](bit_r, bit_c);
      }
      tr += entry * m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
    }
    const double coeff = tr.real() / static_cast<double>(dim);
    if (std::abs(coeff) > drop_below) out.terms.push_back({coeff, labels});
  }
  return out;
}

PostselectResult postselect_estimate(const DoubledState& state, const DenseOperator& o, std::uint64_t shots,
                                     std::uint64_t seed) {
  check_observable(state, o);
  const HermitianEigen eig = eig_hermitian(o);
  return estimate_in_basis(state, eig.vectors, eig.values, shots, seed);
}

GeneralEstimate postselect_estimate_general(const DoubledState& state, const DenseOperator& o,
                                            std::uint64_t shots_per_term, std::uint64_t seed) {
  check_observable(state, o);
  GeneralEstimate out;
  out.decomposition = pauli_decompose(o);
  const std::string identity(static_cast<std::size_t>(state.n()), 'I');
  for (std::size_t t = 0; t < out.decomposition.terms.size(); ++t) {
    const PauliTerm& term = out.decomposition.terms[t];
    if (term.labels == identity) {
      out.per_term.push_back({1.0, 1.0, 0, false});
      out.estimate += term.coefficient;
      continue;
    }
    Matrix v;
    RealVector values;
    pauli_basis(term.labels, v, values);
    try {
      out.per_term.push_back(estimate_in_basis(state, v, values, shots_per_term, seed + t));
    } catch (const PostselectionStarved& e) {
      throw PostselectionStarved("term " + term.labels + ": " + e.what());
    }
    out.estimate += term.coefficient * out.per_term.back().estimate;
  }
  return out;
}

double measurement_cost(double epsilon, double eta, double var_o) {
  if (!(epsilon > 0.0)) throw InvalidArgument("measurement_cost: epsilon must be positive");
  if (!(eta > 0.0) || eta > 1.0) throw InvalidArgument("measurement_cost: eta must lie in (0, 1]");
  if (var_o < 0.0) throw InvalidArgument("measurement_cost: variance must be nonnegative");
  const double r = var_o / (epsilon * epsilon);
  return r * r / eta;
}

double measurement_cost(double epsilon, const std::vector<TermCost>& terms) {
  if (!(epsilon > 0.0)) throw InvalidArgument("measurement_cost: epsilon must be positive");
  if (terms.empty()) throw InvalidArgument("measurement_cost: no terms");
  double sum = 0.0;
  for (const auto& t : terms) {
    if (!(t.eta > 0.0) || t.eta > 1.0) throw InvalidArgument("measurement_cost: eta must lie in (0, 1]");
    if (t.var < 0.0) throw InvalidArgument("measurement_cost: variance must be nonnegative");
    sum += t.var / std::sqrt(t.eta);
  }
  const double r = sum / (epsilon * epsilon);
  return static_cast<double>(terms.size()) * r * r;
}

double diagonal_weight(const DoubledState& state) {
  const double norm2 = state.amplitudes().squaredNorm();
  if (!(norm2 > 0.0)) throw InvalidArgument("diagonal_weight: zero state");
  double diag = 0.0;
  for (Eigen::Index i = 0; i < state.side(); ++i) diag += std::norm(state.amplitude(i, i));
  return diag / norm2;
}

double postselect_stddev(const DoubledState& state, const DenseOperator& o, std::uint64_t shots) {
  check_observable(state, o);
  if (shots == 0) throw InvalidArgument("postselect_stddev: shots must be positive");
  const HermitianEigen eig = eig_hermitian(o);
  const DoubledState rotated = rotate(state, eig.vectors);
  const double norm2 = rotated.amplitudes().squaredNorm();
  double s = 0.0, weighted = 0.0;
  for (Eigen::Index i = 0; i < rotated.side(); ++i) {
    const double root = std::abs(rotated.amplitude(i, i)) / std::sqrt(norm2);
    s += root;
    weighted += root * eig.values(i);
  }
  if (!(s > 0.0)) throw PostselectionStarved("postselect_stddev: no weight on diagonal outcomes");
  const double f = weighted / s;
  double spread = 0.0;
  for (Eigen::Index i = 0; i < rotated.side(); ++i) {
    if (rotated.amplitude(i, i) == Complex(0.0)) continue;
    spread += (eig.values(i) - f) * (eig.values(i) - f);
  }
  return std::sqrt(spread) / (2.0 * s * std::sqrt(static_cast<double>(shots)));
}

}  // namespace voqe

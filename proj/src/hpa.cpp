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

#include "voqe/hpa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace voqe {

namespace {

void check_site(int n, int site, const char* what) {
  if (site < 0 || site >= n) {
    throw InvalidArgument(std::string(what) + ": site " + std::to_string(site) + " out of range");
  }
}

void check_register(int n) {
  if (n < 1 || n > kMaxSystemQubits) throw InvalidArgument("system size out of range");
}

Matrix cz_matrix() {
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  return cz;
}

// Deterministic, generic-looking angles used to check parameterized blocks.
std::vector<double> probe_theta(const HpaBlock& block) {
  int max_index = -1;
  for (const auto& g : block.gates) {
    if (g.euler) max_index = std::max(max_index, *std::max_element(g.euler->index.begin(), g.euler->index.end()));
  }
  std::vector<double> theta(static_cast<std::size_t>(max_index + 1));
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = 0.37 + 0.61 * static_cast<double>(i);
  return theta;
}

// The block restricted to the sites it touches, as a doubled operator on
// those sites only. Keeps the construction-time check small for large n.
DenseOperator local_unitary(const HpaBlock& block, std::span<const double> theta) {
  std::vector<int> sites = block.rs_targets;
  sites.insert(sites.end(), block.cs_targets.begin(), block.cs_targets.end());
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  const int local_n = static_cast<int>(sites.size());
  auto local_site = [&](int s) {
    return static_cast<int>(std::lower_bound(sites.begin(), sites.end(), s) - sites.begin());
  };
  auto local_qubit = [&](int q) {
    return q < block.n ? local_site(q) : local_n + local_site(q - block.n);
  };
  const Eigen::Index dim = Eigen::Index{1} << (2 * local_n);
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : block.gates) {
    std::vector<int> targets;
    for (int q : g.targets) targets.push_back(local_qubit(q));
    u = embed(g.matrix(theta), targets, 2 * local_n) * u;
  }
  return DenseOperator(std::move(u));
}

void require_hpa(const HpaBlock& block, const char* what) {
  const auto theta = probe_theta(block);
  const HpaCheck check = verify_hpa_condition(local_unitary(block, theta));
  if (!check.passed) {
    std::ostringstream msg;
    msg << what << ": block violates the Hermitian-preserving condition by " << check.max_violation
        << " at local entry (i,j,k,l) = (" << check.worst[0] << "," << check.worst[1] << ","
        << check.worst[2] << "," << check.worst[3] << ")";
    throw InvalidArgument(msg.str());
  }
}

void require_unitary(const DenseOperator& u, int qubits, const char* what) {
  if (u.qubits() != qubits) {
    throw InvalidArgument(std::string(what) + ": expected a " + std::to_string(qubits) + "-qubit gate");
  }
  if (!u.is_unitary(kDefaultTol)) throw InvalidArgument(std::string(what) + ": gate is not unitary");
}

}  // namespace

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kType1:
      return "Type1";
    case BlockKind::kType2:
      return "Type2";
    case BlockKind::kType3:
      return "Type3";
  }
  return "?";
}

Matrix euler_matrix(double ax, double ay, double az) {
  using namespace std::complex_literals;
  Matrix rx(2, 2), ry(2, 2), rz(2, 2);
  rx << std::cos(ax), -1.0i * std::sin(ax), -1.0i * std::sin(ax), std::cos(ax);
  ry << std::cos(ay), -std::sin(ay), std::sin(ay), std::cos(ay);
  rz << std::exp(-1.0i * az), 0.0, 0.0, std::exp(1.0i * az);
  return rx * ry * rz;
}

Matrix BlockGate::matrix(std::span<const double> theta) const {
  if (!euler) return fixed;
  std::array<double, 3> a{};
  for (int k = 0; k < 3; ++k) {
    const auto idx = static_cast<std::size_t>(euler->index[k]);
    if (idx >= theta.size()) throw InvalidArgument("parameter vector too short for circuit");
    a[k] = euler->sign[k] * theta[idx];
  }
  return euler_matrix(a[0], a[1], a[2]);
}

DenseOperator HpaBlock::unitary(std::span<const double> theta) const {
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : gates) u = embed(g.matrix(theta), g.targets, 2 * n) * u;
  return DenseOperator(std::move(u));
}

HpaCheck verify_hpa_condition(const DenseOperator& u, double tol) {
  if (u.qubits() % 2 != 0 || u.qubits() == 0) {
    throw InvalidArgument("verify_hpa_condition: operator must act on an even number of qubits");
  }
  const Eigen::Index side = Eigen::Index{1} << (u.qubits() / 2);
  const Matrix& m = u.matrix();
  HpaCheck out;
  for (Eigen::Index i = 0; i < side; ++i) {
    for (Eigen::Index j = 0; j < side; ++j) {
      for (Eigen::Index k = 0; k < side; ++k) {
        for (Eigen::Index l = 0; l < side; ++l) {
          const double v = std::abs(m(i * side + j, k * side + l) - std::conj(m(j * side + i, l * side + k)));
          if (v > out.max_violation) {
            out.max_violation = v;
            out.worst = {i, j, k, l};
          }
        }
      }
    }
  }
  out.passed = out.max_violation <= tol;
  return out;
}

HpaBlock type1_block(int n, const DenseOperator& u1, const std::vector<int>& rs_sites,
                     const std::vector<int>& cs_sites) {
  check_register(n);
  if (rs_sites.empty() || rs_sites.size() != cs_sites.size()) {
    throw InvalidArgument("type1_block: row and column target lists must be nonempty and equal length");
  }
  require_unitary(u1, static_cast<int>(rs_sites.size()), "type1_block");
  HpaBlock block{BlockKind::kType1, n, rs_sites, cs_sites, {}};
  std::vector<int> rs_q, cs_q;
  for (std::size_t k = 0; k < rs_sites.size(); ++k) {
    check_site(n, rs_sites[k], "type1_block");
    check_site(n, cs_sites[k], "type1_block");
    rs_q.push_back(rs_sites[k]);
    cs_q.push_back(n + cs_sites[k]);
  }
  block.gates.push_back({rs_q, u1.matrix(), std::nullopt});
  block.gates.push_back({cs_q, u1.matrix().conjugate(), std::nullopt});
  require_hpa(block, "type1_block");
  return block;
}

HpaBlock type2_block(int n, const DenseOperator& u2, int site_a, int site_b) {
  check_register(n);
  check_site(n, site_a, "type2_block");
  check_site(n, site_b, "type2_block");
  if (site_a == site_b) throw InvalidArgument("type2_block: sites must differ (use a Type3 block)");
  require_unitary(u2, 2, "type2_block");

  const SchmidtDecomposition sd = operator_schmidt(u2);
  Matrix partner = Matrix::Zero(4, 4);
  for (std::size_t k = 0; k < sd.rank(); ++k) {
    partner += sd.coefficients[k] *
               kron(sd.right_ops[k].matrix().conjugate(), sd.left_ops[k].matrix().conjugate());
  }
  const DenseOperator partner_op(partner);
  if (!partner_op.is_unitary(kDefaultTol)) {
    throw Error("type2_block: partner gate from the Schmidt expansion is not unitary");
  }

  HpaBlock block{BlockKind::kType2, n, {site_a, site_b}, {site_b, site_a}, {}};
  block.gates.push_back({{site_a, n + site_b}, u2.matrix(), std::nullopt});
  block.gates.push_back({{site_b, n + site_a}, partner, std::nullopt});
  require_hpa(block, "type2_block");
  return block;
}

HpaBlock type3_block(int n, const DenseOperator& u3, const std::vector<Wire>& wiring) {
  check_register(n);
  if (wiring.empty()) throw InvalidArgument("type3_block: empty wiring");
  require_unitary(u3, 2, "type3_block");
  HpaBlock block{BlockKind::kType3, n, {}, {}, {}};
  for (const Wire& w : wiring) {
    check_site(n, w.rs, "type3_block");
    check_site(n, w.cs, "type3_block");
    block.rs_targets.push_back(w.rs);
    block.cs_targets.push_back(w.cs);
    block.gates.push_back({{w.rs, n + w.cs}, u3.matrix(), std::nullopt});
  }
  require_hpa(block, "type3_block");
  return block;
}

HpaBlock rotation_block(int n, int site, int first_param, Pairing pairing) {
  check_register(n);
  check_site(n, site, "rotation_block");
  if (first_param < 0) throw InvalidArgument("rotation_block: negative parameter index");
  const std::array<int, 3> idx{first_param, first_param + 1, first_param + 2};
  const std::array<double, 3> cs_sign =
      pairing == Pairing::kConjugate ? std::array<double, 3>{-1.0, 1.0, -1.0} : std::array<double, 3>{1.0, 1.0, 1.0};
  HpaBlock block{BlockKind::kType1, n, {site}, {site}, {}};
  block.gates.push_back({{site}, Matrix(), EulerBinding{idx, {1.0, 1.0, 1.0}}});
  block.gates.push_back({{n + site}, Matrix(), EulerBinding{idx, cs_sign}});
  return block;
}

HpaCircuit::HpaCircuit(int n, int num_params) : n_(n), num_params_(num_params) {
  check_register(n);
  if (num_params < 0) throw InvalidArgument("negative parameter count");
}

void HpaCircuit::append(HpaBlock block) {
  if (block.n != n_) throw InvalidArgument("block register size does not match circuit");
  for (const auto& g : block.gates) {
    if (!g.euler) continue;
    for (int idx : g.euler->index) {
      if (idx < 0 || idx >= num_params_) throw InvalidArgument("block binds a parameter outside the circuit");
    }
  }
  blocks_.push_back(std::move(block));
}

bool HpaCircuit::type1_only() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const HpaBlock& b) { return b.kind == BlockKind::kType1; });
}

DenseOperator HpaCircuit::unitary(std::span<const double> theta) const {
  if (theta.size() != static_cast<std::size_t>(num_params_)) {
    throw InvalidArgument("parameter vector length does not match circuit");
  }
  const Eigen::Index dim = Eigen::Index{1} << (2 * n_);
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& b : blocks_) u = b.unitary(theta).matrix() * u;
  return DenseOperator(std::move(u));
}

std::string HpaCircuit::describe() const {
  std::ostringstream out;
  out << "HpaCircuit n=" << n_ << " params=" << num_params_ << " blocks=" << blocks_.size() << "\n";
  auto list = [&](const std::vector<int>& v) {
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "]";
  };
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const HpaBlock& block = blocks_[b];
    out << "  " << b << " " << to_string(block.kind) << " rs=";
    list(block.rs_targets);
    out << " cs=";
    list(block.cs_targets);
    out << "\n";
    for (const auto& g : block.gates) {
      out << "    q=";
      list(g.targets);
      if (g.euler) {
        out << " euler theta[" << g.euler->index[0] << "," << g.euler->index[1] << "," << g.euler->index[2]
            << "] sign(";
        for (int k = 0; k < 3; ++k) out << (k ? "," : "") << (g.euler->sign[k] > 0 ? "+" : "-");
        out << ")";
      } else {
        out << " fixed " << g.fixed.rows() << "x" << g.fixed.cols();
      }
      out << "\n";
    }
  }
  return out.str();
}

HpaCircuit layered_ansatz(int n, int depth, AnsatzLayout layout, Pairing pairing) {
  if (depth < 1) throw InvalidArgument("ansatz depth must be >= 1");
  HpaCircuit circuit(n, 3 * n * (depth + 1));
  const DenseOperator cz(cz_matrix());
  std::vector<Wire> cross;
  for (int s = 0; s < n; ++s) cross.push_back({s, s});
  // Without the neighbour wires the n = 2 circuit conserves one quantity and
  // misses a direction of the Hermitian state manifold.
  for (int s = 0; s + 1 < n; ++s) {
    cross.push_back({s, s + 1});
    cross.push_back({s + 1, s});
  }
  for (int layer = 0; layer <= depth; ++layer) {
    for (int q = 0; q < n; ++q) circuit.append(rotation_block(n, q, 3 * (layer * n + q), pairing));
    if (layer == depth) break;
    if (layout.ladder) {
      for (int q = 0; q + 1 < n; ++q) circuit.append(type1_block(n, cz, {q, q + 1}, {q, q + 1}));
    }
    if (layout.cross) circuit.append(type3_block(n, cz, cross));
  }
  return circuit;
}

HpaCircuit xxz_ansatz(int n, int depth, AnsatzLayout layout, Pairing pairing) {
  if (n < 2) throw InvalidArgument("xxz_ansatz needs n >= 2");
  return layered_ansatz(n, depth, layout, pairing);
}

HpaCircuit nhh_ansatz(int n, int depth) {
  if (n < 2) throw InvalidArgument("nhh_ansatz needs n >= 2");
  return layered_ansatz(n, depth, AnsatzLayout{true, false});
}

}  // namespace voqe

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

#include "voqe/models.hpp"

#include <string>

namespace voqe {

namespace {

DenseOperator two_site(int n, int a, char la, int b, char lb) {
  std::string labels(static_cast<std::size_t>(n), 'I');
  labels[static_cast<std::size_t>(a)] = la;
  labels[static_cast<std::size_t>(b)] = lb;
  return pauli_string(n, labels);
}

void check_chain(int n) {
  if (n < 2) throw InvalidArgument("chain models need at least two sites");
  if (n > kMaxSystemQubits) throw InvalidArgument("chain longer than the supported system size");
}

}  // namespace

LindbladModel driven_xxz(int n, double delta, double epsilon) {
  check_chain(n);
  DenseOperator h = DenseOperator::zero(n);
  for (int i = 0; i + 1 < n; ++i) {
    h += delta * two_site(n, i, 'Z', i + 1, 'Z');
    h += 2.0 * two_site(n, i, '+', i + 1, '-');
    h += 2.0 * two_site(n, i, '-', i + 1, '+');
  }
  LindbladModel model{std::move(h), {}};
  model.jumps.push_back({site_operator(n, 0, '+'), epsilon});
  model.jumps.push_back({site_operator(n, n - 1, '-'), epsilon});
  model.validate();
  return model;
}

NhhModel imaginary_ising(int n, double lambda, double kappa) {
  check_chain(n);
  DenseOperator h = DenseOperator::zero(n);
  DenseOperator gamma = DenseOperator::zero(n);
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    h -= 0.5 * site_operator(n, i, 'Z');
    h -= (0.5 * lambda) * two_site(n, i, 'X', next, 'X');
    gamma += (0.5 * kappa) * site_operator(n, i, 'X');
  }
  NhhModel model{std::move(h), std::move(gamma)};
  model.validate();
  return model;
}

LindbladModel amplitude_damping(double rate) {
  // Decay into |0> (the Z = +1 state) is driven by |0><1|.
  LindbladModel model{DenseOperator::zero(1), {{site_operator(1, 0, '+'), rate}}};
  model.validate();
  return model;
}

LindbladModel balanced_pumping(double rate) {
  LindbladModel model{DenseOperator::zero(1), {{site_operator(1, 0, '-'), rate}, {site_operator(1, 0, '+'), rate}}};
  model.validate();
  return model;
}

}  // namespace voqe

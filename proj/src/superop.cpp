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

#include "voqe/superop.hpp"

#include <algorithm>
#include <sstream>

#include "voqe/vectorize.hpp"

namespace voqe {

namespace {

using namespace std::complex_literals;

void check_size(int n) {
  if (n < 1 || n > kMaxSystemQubits) {
    std::ostringstream msg;
    msg << "system size " << n << " outside supported range 1.." << kMaxSystemQubits;
    throw InvalidArgument(msg.str());
  }
}

Matrix commutator_part(const Matrix& h) {
  const Matrix id = Matrix::Identity(h.rows(), h.cols());
  return -1.0i * (kron(h, id) - kron(id, h.transpose()));
}

}  // namespace

void LindbladModel::validate() const {
  check_size(hamiltonian.qubits());
  if (!hamiltonian.is_hermitian()) throw InvalidArgument("Lindblad Hamiltonian is not Hermitian");
  for (const JumpChannel& jump : jumps) {
    if (jump.op.dim() != hamiltonian.dim()) throw InvalidArgument("jump operator dimension mismatch");
    if (!(jump.rate >= 0.0)) throw InvalidArgument("jump rates must be nonnegative");
  }
}

void NhhModel::validate() const {
  check_size(h.qubits());
  if (gamma.dim() != h.dim()) throw InvalidArgument("nHH decay part dimension mismatch");
  if (!h.is_hermitian()) throw InvalidArgument("nHH Hermitian part is not Hermitian");
  if (!gamma.is_hermitian()) throw InvalidArgument("nHH decay part is not Hermitian");
}

DenseOperator NhhModel::effective_hamiltonian() const {
  return DenseOperator(h.matrix() - 1.0i * gamma.matrix());
}

DenseOperator apply_lindbladian(const LindbladModel& model, const DenseOperator& rho) {
  model.validate();
  if (rho.dim() != model.hamiltonian.dim()) throw InvalidArgument("density matrix does not match the model");
  using namespace std::complex_literals;
  const Matrix& h = model.hamiltonian.matrix();
  const Matrix& r = rho.matrix();
  Matrix out = -1.0i * (h * r - r * h);
  for (const JumpChannel& jump : model.jumps) {
    const Matrix& f = jump.op.matrix();
    const Matrix fdf = f.adjoint() * f;
    out += jump.rate * (f * r * f.adjoint() - 0.5 * (fdf * r + r * fdf));
  }
  return DenseOperator(std::move(out));
}

DenseOperator build_lindblad_superop(const LindbladModel& model) {
  model.validate();
  const Matrix& h = model.hamiltonian.matrix();
  const Matrix id = Matrix::Identity(h.rows(), h.cols());
  Matrix l = commutator_part(h);
  for (const JumpChannel& jump : model.jumps) {
    const Matrix& f = jump.op.matrix();
    const Matrix fdf = f.adjoint() * f;
    l += jump.rate * (kron(f, f.conjugate()) - 0.5 * kron(fdf, id) - 0.5 * kron(id, fdf.transpose()));
  }
  return DenseOperator(std::move(l));
}

DenseOperator nhh_superop_base(const NhhModel& model) {
  model.validate();
  const Matrix& g = model.gamma.matrix();
  const Matrix id = Matrix::Identity(g.rows(), g.cols());
  return DenseOperator(commutator_part(model.h.matrix()) - (kron(g, id) + kron(id, g.transpose())));
}

DenseOperator build_nhh_superop(const NhhModel& model, double trace_gamma_rho) {
  Matrix base = nhh_superop_base(model).matrix();
  base.diagonal().array() += 2.0 * trace_gamma_rho;
  return DenseOperator(std::move(base));
}

DenseOperator exact_lme_steady_state(const DenseOperator& lhat) {
  if (lhat.qubits() % 2 != 0) throw InvalidArgument("superoperator must act on a doubled register");
  check_size(lhat.qubits() / 2);
  const Matrix& l = lhat.matrix();
  const HermitianEigen eig = eig_hermitian(Matrix(l.adjoint() * l), 1e-8);
  if (eig.values.size() > 1 && eig.values(1) < 1e-10) {
    std::ostringstream msg;
    msg << "steady state is not unique: second-smallest eigenvalue of L^dag L is " << eig.values(1);
    throw NonUniqueSteadyState(msg.str());
  }
  // The null vector comes from a linear solve rather than from the L^dag L
  // eigenvectors, which lose half the digits. Trace preservation makes the
  // (0,0) row a combination of the other diagonal rows, so swapping it for
  // the trace functional leaves a nonsingular system when the steady state
  // is unique.
  const Eigen::Index side = Eigen::Index{1} << (lhat.qubits() / 2);
  Matrix a = l;
  a.row(0).setZero();
  for (Eigen::Index i = 0; i < side; ++i) a(0, i * side + i) = 1.0;
  Vector rhs = Vector::Zero(l.rows());
  rhs(0) = 1.0;
  const Vector x = a.partialPivLu().solve(rhs);
  Matrix rho(side, side);
  for (Eigen::Index i = 0; i < side; ++i) {
    for (Eigen::Index j = 0; j < side; ++j) rho(i, j) = x(i * side + j);
  }
  rho = 0.5 * (rho + rho.adjoint());
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-12) throw Error("steady-state null vector is traceless");
  rho /= tr;

  const double residual = (l * vectorize(DenseOperator(rho)).amplitudes()).norm();
  const double min_eig = eig_hermitian(rho, 1e-8).values(0);
  if (residual >= 1e-8 * std::max(1.0, max_abs(l)) || min_eig < -1e-8) {
    std::ostringstream msg;
    msg << "steady-state oracle failed its checks (residual " << residual << ", min eigenvalue "
        << min_eig << ")";
    throw Error(msg.str());
  }
  return DenseOperator(std::move(rho));
}

std::vector<NhhEigenpair> exact_nhh_spectrum(const NhhModel& model) {
  model.validate();
  const Matrix hnh = model.effective_hamiltonian().matrix();
  Eigen::ComplexEigenSolver<Matrix> solver(hnh, true);
  if (solver.info() != Eigen::Success) throw Error("non-Hermitian eigensolver did not converge");
  std::vector<NhhEigenpair> out;
  for (Eigen::Index k = 0; k < hnh.rows(); ++k) {
    const Complex e = solver.eigenvalues()(k);
    Vector v = solver.eigenvectors().col(k);
    v.normalize();
    const double residual = (hnh * v - e * v).norm();
    out.push_back({e, std::move(v), residual});
  }
  std::sort(out.begin(), out.end(), [](const NhhEigenpair& a, const NhhEigenpair& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace voqe

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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace voqe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest system size (qubits per subsystem) accepted by the dense builders.
/// The doubled-space superoperator at this size is 4096 x 4096.
inline constexpr int kMaxSystemQubits = 6;

/// Default tolerance for Hermiticity / unitarity / HPA predicates.
inline constexpr double kDefaultTol = 1e-10;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument, dimension mismatch, or precondition violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The Liouvillian null space is degenerate, so the steady state is not unique.
class NonUniqueSteadyState : public Error {
 public:
  using Error::Error;
};

/// No samples landed on the diagonal |i,i> basis states.
class PostselectionStarved : public Error {
 public:
  using Error::Error;
};

/// Problem parsing or validating an experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace voqe

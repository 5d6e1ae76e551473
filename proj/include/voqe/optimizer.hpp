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

// BFGS with a strong-Wolfe line search, and central finite differences.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "voqe/common.hpp"

namespace voqe {

using CostFn = std::function<double(std::span<const double> theta)>;
/// Returns the cost and writes the gradient into `grad`.
using CostGradFn = std::function<double(std::span<const double> theta, std::span<double> grad)>;

/// Central differences (c(theta + h e_k) - c(theta - h e_k)) / 2h.
RealVector gradient(const CostFn& cost, std::span<const double> theta, double h = 1e-6);

/// Wraps a cost-only function with the finite-difference gradient above.
CostGradFn with_finite_differences(CostFn cost, double h = 1e-6);

struct MinimizeOptions {
  int max_iter = 2000;
  double grad_tol = 1e-8;   // stop when the gradient 2-norm drops below this
  double cost_tol = 1e-10;  // stop when the cost drops below this
  double c1 = 1e-4;         // sufficient decrease
  double c2 = 0.9;          // curvature
};

struct HistoryPoint {
  int iteration = 0;
  double cost = 0.0;
};

struct RunRecord {
  std::vector<std::pair<std::string, double>> parameters;  // model parameters, filled by drivers
  std::uint64_t seed = 0;
  RealVector theta_init;
  RealVector theta_final;
  std::vector<HistoryPoint> cost_history;  // one entry per accepted step, iteration 0 first
  double final_cost = 0.0;
  bool converged = false;
  std::string status;
  int iterations = 0;
  int evaluations = 0;
  double wall_seconds = 0.0;
};

/// Minimizes from `theta0`. Accepted steps satisfy the sufficient-decrease
/// condition, so cost_history is nonincreasing. When the line search cannot
/// make progress the best point so far is returned with converged = false.
RunRecord minimize(const CostGradFn& cost, const RealVector& theta0, const MinimizeOptions& options = {});

}  // namespace voqe

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

// Experiment configuration: a nested JSON file, overridable by CLI flags.
//
//   {
//     "experiment": "xxz",
//     "model":     {"n": 3, "delta": 1.0, "eps_start": 200, "eps_end": 0.1, "eps_points": 8},
//     "ansatz":    {"depth": 12, "ladder": true, "cross": true, "init_width": 0.1},
//     "optimizer": {"max_iter": 2000, "grad_tol": 1e-8, "cost_tol": 1e-10},
//     "estimation": {"shots": 100000},
//     "run":       {"seed": 7, "jobs": 1, "out": "runs/xxz", "max_failure_fraction": 0.5}
//   }
//
// Unknown keys are rejected so that typos do not silently fall back to defaults.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "voqe/optimizer.hpp"

namespace voqe {

enum class Experiment { kXxz, kIsing, kSingle };

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& name);

struct ModelConfig {
  int n = 0;  // 0 selects the default: 1 for single-qubit models, 3 otherwise
  // driven XXZ chain
  double delta = 1.0;
  double eps_start = 200.0;
  double eps_end = 0.1;
  int eps_points = 8;
  std::vector<double> eps_schedule;  // explicit list; overrides start/end/points when nonempty
  double warmup_start = 1.0;         // ramp from here up to the first schedule point
  int warmup_points = 8;             // 0 disables the ramp
  // imaginary-field Ising chain
  double lambda = 0.5;
  double kappa_start = -2.0;
  double kappa_end = 2.0;
  int kappa_points = 5;
  std::vector<double> kappa_schedule;
  int restarts = 30;
  // single run: "amplitude_damping", "balanced_pumping", "xxz" or "ising"
  std::string name = "amplitude_damping";
  double rate = 1.0;
  double epsilon = 1.0;
  double kappa = 0.0;
};

struct AnsatzConfig {
  int depth = 0;  // 0 selects the experiment default (see default_depth)
  bool ladder = true;
  bool cross = true;
  double init_width = 0.1;
};

struct RunConfig {
  std::uint64_t seed = 7;
  int jobs = 1;
  std::string out = "runs";
  double max_failure_fraction = 0.5;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::kXxz;
  ModelConfig model;
  AnsatzConfig ansatz;
  MinimizeOptions optimizer;
  std::uint64_t shots = 100000;
  RunConfig run;

  /// Throws ConfigError on out-of-range or non-finite values.
  void validate() const;
  /// Fills experiment-dependent defaults (system size, ansatz depth).
  void resolve();

  /// Epsilon values in run order: eps_schedule, or eps_start -> eps_end log-spaced.
  std::vector<double> eps_values() const;
  /// Kappa values: kappa_schedule, or kappa_start -> kappa_end evenly spaced.
  std::vector<double> kappa_values() const;
  /// Log-spaced ramp warmup_start -> first eps value, excluding the endpoint.
  std::vector<double> warmup_values() const;
};

int default_depth(Experiment e);

/// n log-spaced values from a to b inclusive (a, b > 0).
std::vector<double> log_space(double a, double b, int n);
/// n evenly spaced values from a to b inclusive.
std::vector<double> lin_space(double a, double b, int n);

nlohmann::json to_json(const ExperimentConfig& config);
/// Merges `j` over `base`; throws ConfigError on unknown keys or wrong types.
ExperimentConfig from_json(const nlohmann::json& j, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

}  // namespace voqe

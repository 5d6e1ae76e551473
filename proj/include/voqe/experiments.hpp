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

// Experiment drivers. Each study has an in-memory form (used by tests) and a
// run_* form that writes CSV tables plus a JSON metadata sidecar into
// config.run.out. Column layouts are documented in schema/.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "voqe/config.hpp"
#include "voqe/vqa.hpp"

namespace voqe {

/// LME runs count as solved below this final cost.
inline constexpr double kLmeAcceptCost = 1e-8;

/// Calls fn(0..count-1) on up to `jobs` threads. The first exception thrown
/// by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

struct SiteObservable {
  int site = 0;
  double trained = 0.0;    // exact <Z> of the trained state
  double estimated = 0.0;  // post-selected shot estimate (NaN if starved)
  double std_error = 0.0;  // leading-order standard error of `estimated`
  double eta_hat = 0.0;
  double oracle = 0.0;     // exact steady state
};

struct XxzPoint {
  double epsilon = 0.0;
  RunRecord record;
  std::vector<SiteObservable> sites;
  double eta = 0.0;           // exact post-selection rate of the trained state
  bool accepted = false;      // final cost < kLmeAcceptCost
  bool physical = false;      // trained state passes is_density_matrix_state at 1e-6
};

struct XxzResult {
  std::vector<RunRecord> warmup;
  std::vector<XxzPoint> points;
};

/// Warm-up ramp, then the epsilon schedule with warm starts between points.
XxzResult xxz_sweep(const ExperimentConfig& config);

struct IsingRestart {
  int restart = 0;
  RunRecord record;
  NhhEigenvalue eigenvalue;
};

struct IsingPoint {
  double kappa = 0.0;
  std::vector<IsingRestart> restarts;
  std::vector<NhhEigenpair> oracle;
  std::vector<EigenvalueCluster> clusters;  // accepted eigenvalues only
  int covered = 0;                          // oracle eigenvalues within 1e-3 of an accepted one
};

struct IsingResult {
  std::vector<IsingPoint> points;
};

/// Independent restarts per kappa value, run on config.run.jobs threads.
/// Restart r at point p uses a generator seeded with (seed, p, r).
IsingResult ising_spectrum(const ExperimentConfig& config);

/// Radius used to match extracted eigenvalues against the oracle spectrum.
inline constexpr double kSpectrumMatchRadius = 1e-3;

struct SingleResult {
  RunRecord record;
  DoubledState state;
  std::vector<SiteObservable> sites;  // LME models
  double eta = 0.0;
  std::optional<NhhEigenvalue> eigenvalue;  // ising model
};

SingleResult single_run(const ExperimentConfig& config);

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 2 too many failed runs
  int failures = 0;
  int total = 0;
  std::vector<std::string> files;
};

RunOutcome run_xxz(const ExperimentConfig& config);
RunOutcome run_ising(const ExperimentConfig& config);
RunOutcome run_single(const ExperimentConfig& config);

/// Dispatches on config.experiment.
RunOutcome run_experiment(const ExperimentConfig& config);

}  // namespace voqe

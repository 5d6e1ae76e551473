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

// voqe: command-line front end.
//
//   voqe xxz    [--config FILE] [flags]   driven XXZ steady states over an epsilon sweep
//   voqe ising  [--config FILE] [flags]   imaginary-field Ising spectrum over a kappa sweep
//   voqe single [--config FILE] [flags]   one optimization of a named model
//   voqe verify [--seed S] [--trials T]   randomized invariant suite
//
// Exit codes: 0 success, 1 config error, 2 too many unconverged runs,
// 3 verify found a failing check.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "voqe/config.hpp"
#include "voqe/experiments.hpp"
#include "voqe/verify.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitVerify = 3;

// Flags that override config-file values. Each registers an option and an
// action that copies the parsed value into the config when it was given.
class Overrides {
 public:
  template <typename T>
  void add(CLI::App* app, const std::string& flag, const std::string& help,
           std::function<void(voqe::ExperimentConfig&, const T&)> apply) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app->add_option(flag, *value, help);
    actions_.push_back([opt, value, apply](voqe::ExperimentConfig& c) {
      if (opt->count() > 0) apply(c, *value);
    });
  }

  void apply(voqe::ExperimentConfig& c) const {
    for (const auto& a : actions_) a(c);
  }

 private:
  std::vector<std::function<void(voqe::ExperimentConfig&)>> actions_;
};

void add_common(CLI::App* app, Overrides& o) {
  o.add<int>(app, "--n", "number of system qubits", [](auto& c, const int& v) { c.model.n = v; });
  o.add<int>(app, "--depth", "ansatz layers (0 = experiment default)",
             [](auto& c, const int& v) { c.ansatz.depth = v; });
  o.add<bool>(app, "--ladder", "in-subsystem CZ ladder", [](auto& c, const bool& v) { c.ansatz.ladder = v; });
  o.add<bool>(app, "--cross", "cross-subsystem CZ gates", [](auto& c, const bool& v) { c.ansatz.cross = v; });
  o.add<double>(app, "--init-width", "half-width of the uniform parameter init",
                [](auto& c, const double& v) { c.ansatz.init_width = v; });
  o.add<int>(app, "--max-iter", "BFGS iteration cap per run", [](auto& c, const int& v) { c.optimizer.max_iter = v; });
  o.add<double>(app, "--grad-tol", "gradient-norm stopping tolerance",
                [](auto& c, const double& v) { c.optimizer.grad_tol = v; });
  o.add<double>(app, "--cost-tol", "cost stopping tolerance", [](auto& c, const double& v) { c.optimizer.cost_tol = v; });
  o.add<std::uint64_t>(app, "--shots", "shots per post-selected estimate",
                       [](auto& c, const std::uint64_t& v) { c.shots = v; });
  o.add<std::uint64_t>(app, "--seed", "master seed", [](auto& c, const std::uint64_t& v) { c.run.seed = v; });
  o.add<int>(app, "--jobs", "worker threads", [](auto& c, const int& v) { c.run.jobs = v; });
  o.add<std::string>(app, "--out", "output directory", [](auto& c, const std::string& v) { c.run.out = v; });
  o.add<double>(app, "--max-failure-fraction", "unconverged fraction above which the exit code is 2",
                [](auto& c, const double& v) { c.run.max_failure_fraction = v; });
}

void add_xxz(CLI::App* app, Overrides& o) {
  o.add<double>(app, "--delta", "anisotropy", [](auto& c, const double& v) { c.model.delta = v; });
  o.add<double>(app, "--eps-start", "first drive strength", [](auto& c, const double& v) { c.model.eps_start = v; });
  o.add<double>(app, "--eps-end", "last drive strength", [](auto& c, const double& v) { c.model.eps_end = v; });
  o.add<int>(app, "--eps-points", "log-spaced sweep points", [](auto& c, const int& v) { c.model.eps_points = v; });
  o.add<std::vector<double>>(app, "--eps", "explicit drive strengths (overrides start/end/points)",
                             [](auto& c, const std::vector<double>& v) { c.model.eps_schedule = v; });
  o.add<double>(app, "--warmup-start", "start of the warm-up ramp",
                [](auto& c, const double& v) { c.model.warmup_start = v; });
  o.add<int>(app, "--warmup-points", "warm-up ramp points (0 disables)",
             [](auto& c, const int& v) { c.model.warmup_points = v; });
}

void add_ising(CLI::App* app, Overrides& o) {
  o.add<double>(app, "--lambda", "transverse coupling", [](auto& c, const double& v) { c.model.lambda = v; });
  o.add<double>(app, "--kappa-start", "first imaginary field", [](auto& c, const double& v) { c.model.kappa_start = v; });
  o.add<double>(app, "--kappa-end", "last imaginary field", [](auto& c, const double& v) { c.model.kappa_end = v; });
  o.add<int>(app, "--kappa-points", "evenly spaced sweep points",
             [](auto& c, const int& v) { c.model.kappa_points = v; });
  o.add<std::vector<double>>(app, "--kappa", "explicit field values (overrides start/end/points)",
                             [](auto& c, const std::vector<double>& v) { c.model.kappa_schedule = v; });
  o.add<int>(app, "--restarts", "random restarts per point", [](auto& c, const int& v) { c.model.restarts = v; });
}

void add_single(CLI::App* app, Overrides& o) {
  o.add<std::string>(app, "--model", "amplitude_damping, balanced_pumping, xxz or ising",
                     [](auto& c, const std::string& v) { c.model.name = v; });
  o.add<double>(app, "--rate", "decay or pumping rate", [](auto& c, const double& v) { c.model.rate = v; });
  o.add<double>(app, "--epsilon", "xxz drive strength", [](auto& c, const double& v) { c.model.epsilon = v; });
  o.add<double>(app, "--delta", "xxz anisotropy", [](auto& c, const double& v) { c.model.delta = v; });
  o.add<double>(app, "--kappa", "ising imaginary field", [](auto& c, const double& v) { c.model.kappa = v; });
  o.add<double>(app, "--lambda", "ising transverse coupling", [](auto& c, const double& v) { c.model.lambda = v; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational steady states of open quantum systems"};
  app.set_version_flag("--version", std::string(VOQE_VERSION));
  app.require_subcommand(1);

  struct Verb {
    CLI::App* app;
    voqe::Experiment experiment;
    Overrides overrides;
    std::string config_path;
    bool print_config = false;
  };
  std::vector<Verb> verbs;
  verbs.reserve(3);
  verbs.push_back({app.add_subcommand("xxz", "driven XXZ chain, epsilon sweep"), voqe::Experiment::kXxz, {}, {}});
  verbs.push_back({app.add_subcommand("ising", "imaginary-field Ising chain, kappa sweep"), voqe::Experiment::kIsing,
                   {}, {}});
  verbs.push_back({app.add_subcommand("single", "one optimization of a named model"), voqe::Experiment::kSingle, {},
                   {}});
  for (Verb& v : verbs) {
    v.app->add_option("--config", v.config_path, "JSON config file; flags override its values")
        ->check(CLI::ExistingFile);
    v.app->add_flag("--print-config", v.print_config, "print the resolved config and exit");
    add_common(v.app, v.overrides);
  }
  add_xxz(verbs[0].app, verbs[0].overrides);
  add_ising(verbs[1].app, verbs[1].overrides);
  add_single(verbs[2].app, verbs[2].overrides);

  CLI::App* verify = app.add_subcommand("verify", "randomized invariant suite");
  std::uint64_t verify_seed = 7;
  int verify_trials = 100;
  verify->add_option("--seed", verify_seed, "seed for the random instances");
  verify->add_option("--trials", verify_trials, "instances per check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (verify->parsed()) {
    const std::vector<voqe::VerifyCheck> checks = voqe::run_invariant_suite(verify_seed, verify_trials);
    std::cout << voqe::format_verify_table(checks);
    for (const auto& c : checks) {
      if (!c.passed()) return kExitVerify;
    }
    return 0;
  }

  for (Verb& v : verbs) {
    if (!v.app->parsed()) continue;
    voqe::ExperimentConfig config;
    try {
      if (!v.config_path.empty()) config = voqe::load_config(v.config_path);
      config.experiment = v.experiment;
      v.overrides.apply(config);
      config.resolve();
      config.validate();
    } catch (const voqe::ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kExitConfig;
    }
    if (v.print_config) {
      std::cout << voqe::to_json(config).dump(2) << "\n";
      return 0;
    }
    try {
      const voqe::RunOutcome outcome = voqe::run_experiment(config);
      for (const std::string& f : outcome.files) std::cout << "wrote " << f << "\n";
      std::cout << outcome.total - outcome.failures << "/" << outcome.total << " runs converged\n";
      return outcome.exit_code;
    } catch (const voqe::InvalidArgument& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kExitConfig;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

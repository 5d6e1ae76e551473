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

#include "voqe/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace voqe {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void require_finite(double v, const std::string& name) {
  require(std::isfinite(v), name + " must be finite");
}

// Reads obj[key] into `field` if present, with a readable error on type mismatch.
template <typename T>
void read(const json& obj, const std::string& section, const char* key, T& field) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    field = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(section + "." + key + " has the wrong type");
  }
}

void reject_unknown(const json& obj, const std::string& section, std::initializer_list<const char*> known) {
  if (!obj.is_object()) throw ConfigError(section + " must be an object");
  const std::set<std::string> allowed(known.begin(), known.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw ConfigError("unknown key " + section + "." + it.key());
  }
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::kXxz:
      return "xxz";
    case Experiment::kIsing:
      return "ising";
    case Experiment::kSingle:
      return "single";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  if (name == "xxz" || name == "xxz_steady_state") return Experiment::kXxz;
  if (name == "ising" || name == "ising_spectrum") return Experiment::kIsing;
  if (name == "single" || name == "single_model") return Experiment::kSingle;
  throw ConfigError("unknown experiment '" + name + "'");
}

int default_depth(Experiment e) {
  switch (e) {
    case Experiment::kXxz:
      return 12;
    case Experiment::kIsing:
      return 3;
    case Experiment::kSingle:
      return 2;
  }
  return 1;
}

std::vector<double> log_space(double a, double b, int n) {
  if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("log-spaced schedule needs positive endpoints");
  if (n < 1) throw ConfigError("schedule needs at least one point");
  if (n == 1) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
  out.front() = a;
  out.back() = b;
  return out;
}

std::vector<double> lin_space(double a, double b, int n) {
  if (n < 1) throw ConfigError("schedule needs at least one point");
  if (n == 1) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  out.back() = b;
  return out;
}

static bool single_qubit_model(const ExperimentConfig& c) {
  return c.experiment == Experiment::kSingle &&
         (c.model.name == "amplitude_damping" || c.model.name == "balanced_pumping");
}

void ExperimentConfig::resolve() {
  if (model.n == 0) model.n = single_qubit_model(*this) ? 1 : 3;
  if (ansatz.depth == 0) ansatz.depth = default_depth(experiment);
}

void ExperimentConfig::validate() const {
  const ModelConfig& m = model;
  if (single_qubit_model(*this)) {
    require(m.n == 1, "model.n must be 1 for single-qubit models");
  } else {
    require(m.n >= 2 && m.n <= kMaxSystemQubits,
            "model.n must lie in [2, " + std::to_string(kMaxSystemQubits) + "]");
  }
  for (double v : {m.delta, m.eps_start, m.eps_end, m.warmup_start, m.lambda, m.kappa_start, m.kappa_end, m.rate,
                   m.epsilon, m.kappa, ansatz.init_width, optimizer.grad_tol, optimizer.cost_tol,
                   run.max_failure_fraction}) {
    require_finite(v, "numeric config field");
  }
  for (double v : m.eps_schedule) require(std::isfinite(v) && v > 0.0, "model.eps_schedule entries must be positive");
  for (double v : m.kappa_schedule) require_finite(v, "model.kappa_schedule entry");
  if (experiment == Experiment::kXxz) {
    require(!m.eps_schedule.empty() || m.eps_points >= 1, "epsilon schedule is empty");
    require(m.eps_start > 0.0 && m.eps_end > 0.0, "model.eps_start and model.eps_end must be positive");
    require(m.warmup_points >= 0, "model.warmup_points must be nonnegative");
    require(m.warmup_points == 0 || m.warmup_start > 0.0, "model.warmup_start must be positive");
  }
  if (experiment == Experiment::kIsing) {
    require(!m.kappa_schedule.empty() || m.kappa_points >= 1, "kappa schedule is empty");
    require(m.restarts >= 1, "model.restarts must be at least 1");
  }
  if (experiment == Experiment::kSingle) {
    require(m.name == "amplitude_damping" || m.name == "balanced_pumping" || m.name == "xxz" || m.name == "ising",
            "model.name must be amplitude_damping, balanced_pumping, xxz or ising");
    require(m.rate >= 0.0 && m.epsilon >= 0.0, "rates must be nonnegative");
  }
  require(ansatz.depth >= 0, "ansatz.depth must be nonnegative");
  require(ansatz.init_width >= 0.0, "ansatz.init_width must be nonnegative");
  require(optimizer.max_iter >= 0, "optimizer.max_iter must be nonnegative");
  require(optimizer.grad_tol >= 0.0 && optimizer.cost_tol >= 0.0, "optimizer tolerances must be nonnegative");
  require(shots >= 1, "estimation.shots must be positive");
  require(run.jobs >= 1, "run.jobs must be at least 1");
  require(run.max_failure_fraction >= 0.0 && run.max_failure_fraction <= 1.0,
          "run.max_failure_fraction must lie in [0, 1]");
  require(!run.out.empty(), "run.out must be set");
}

std::vector<double> ExperimentConfig::eps_values() const {
  if (!model.eps_schedule.empty()) return model.eps_schedule;
  return log_space(model.eps_start, model.eps_end, model.eps_points);
}

std::vector<double> ExperimentConfig::kappa_values() const {
  if (!model.kappa_schedule.empty()) return model.kappa_schedule;
  return lin_space(model.kappa_start, model.kappa_end, model.kappa_points);
}

std::vector<double> ExperimentConfig::warmup_values() const {
  if (model.warmup_points == 0) return {};
  const double target = eps_values().front();
  std::vector<double> ramp = log_space(model.warmup_start, target, model.warmup_points + 1);
  ramp.pop_back();
  return ramp;
}

json to_json(const ExperimentConfig& c) {
  const ModelConfig& m = c.model;
  json model = {{"n", m.n},
                {"delta", m.delta},
                {"eps_start", m.eps_start},
                {"eps_end", m.eps_end},
                {"eps_points", m.eps_points},
                {"eps_schedule", m.eps_schedule},
                {"warmup_start", m.warmup_start},
                {"warmup_points", m.warmup_points},
                {"lambda", m.lambda},
                {"kappa_start", m.kappa_start},
                {"kappa_end", m.kappa_end},
                {"kappa_points", m.kappa_points},
                {"kappa_schedule", m.kappa_schedule},
                {"restarts", m.restarts},
                {"name", m.name},
                {"rate", m.rate},
                {"epsilon", m.epsilon},
                {"kappa", m.kappa}};
  return {{"experiment", to_string(c.experiment)},
          {"model", model},
          {"ansatz",
           {{"depth", c.ansatz.depth},
            {"ladder", c.ansatz.ladder},
            {"cross", c.ansatz.cross},
            {"init_width", c.ansatz.init_width}}},
          {"optimizer",
           {{"max_iter", c.optimizer.max_iter},
            {"grad_tol", c.optimizer.grad_tol},
            {"cost_tol", c.optimizer.cost_tol}}},
          {"estimation", {{"shots", c.shots}}},
          {"run",
           {{"seed", c.run.seed},
            {"jobs", c.run.jobs},
            {"out", c.run.out},
            {"max_failure_fraction", c.run.max_failure_fraction}}}};
}

ExperimentConfig from_json(const json& j, ExperimentConfig c) {
  reject_unknown(j, "config", {"experiment", "model", "ansatz", "optimizer", "estimation", "run"});
  if (j.contains("experiment")) {
    require(j["experiment"].is_string(), "experiment must be a string");
    c.experiment = parse_experiment(j["experiment"].get<std::string>());
  }
  if (j.contains("model")) {
    const json& m = j["model"];
    reject_unknown(m, "model",
                   {"n", "delta", "eps_start", "eps_end", "eps_points", "eps_schedule", "warmup_start",
                    "warmup_points", "lambda", "kappa_start", "kappa_end", "kappa_points", "kappa_schedule",
                    "restarts", "name", "rate", "epsilon", "kappa"});
    ModelConfig& mc = c.model;
    read(m, "model", "n", mc.n);
    read(m, "model", "delta", mc.delta);
    read(m, "model", "eps_start", mc.eps_start);
    read(m, "model", "eps_end", mc.eps_end);
    read(m, "model", "eps_points", mc.eps_points);
    read(m, "model", "eps_schedule", mc.eps_schedule);
    read(m, "model", "warmup_start", mc.warmup_start);
    read(m, "model", "warmup_points", mc.warmup_points);
    read(m, "model", "lambda", mc.lambda);
    read(m, "model", "kappa_start", mc.kappa_start);
    read(m, "model", "kappa_end", mc.kappa_end);
    read(m, "model", "kappa_points", mc.kappa_points);
    read(m, "model", "kappa_schedule", mc.kappa_schedule);
    read(m, "model", "restarts", mc.restarts);
    read(m, "model", "name", mc.name);
    read(m, "model", "rate", mc.rate);
    read(m, "model", "epsilon", mc.epsilon);
    read(m, "model", "kappa", mc.kappa);
  }
  if (j.contains("ansatz")) {
    const json& a = j["ansatz"];
    reject_unknown(a, "ansatz", {"depth", "ladder", "cross", "init_width"});
    read(a, "ansatz", "depth", c.ansatz.depth);
    read(a, "ansatz", "ladder", c.ansatz.ladder);
    read(a, "ansatz", "cross", c.ansatz.cross);
    read(a, "ansatz", "init_width", c.ansatz.init_width);
  }
  if (j.contains("optimizer")) {
    const json& o = j["optimizer"];
    reject_unknown(o, "optimizer", {"max_iter", "grad_tol", "cost_tol"});
    read(o, "optimizer", "max_iter", c.optimizer.max_iter);
    read(o, "optimizer", "grad_tol", c.optimizer.grad_tol);
    read(o, "optimizer", "cost_tol", c.optimizer.cost_tol);
  }
  if (j.contains("estimation")) {
    const json& e = j["estimation"];
    reject_unknown(e, "estimation", {"shots"});
    read(e, "estimation", "shots", c.shots);
  }
  if (j.contains("run")) {
    const json& r = j["run"];
    reject_unknown(r, "run", {"seed", "jobs", "out", "max_failure_fraction"});
    read(r, "run", "seed", c.run.seed);
    read(r, "run", "jobs", c.run.jobs);
    read(r, "run", "out", c.run.out);
    read(r, "run", "max_failure_fraction", c.run.max_failure_fraction);
  }
  return c;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return from_json(j, std::move(base));
}

}  // namespace voqe

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

#include "voqe/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "voqe/estimator.hpp"
#include "voqe/models.hpp"
#include "voqe/random.hpp"

namespace voqe {

using nlohmann::json;

namespace {

// Stream tags keep the seeds of different consumers apart.
enum : std::uint64_t { kInitStream = 1, kShotStream = 2 };

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::span<const double> span_of(const RealVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

CostGradFn as_cost(const LmeCost& c) {
  return [&c](std::span<const double> t, std::span<double> g) { return c(t, g); };
}

std::vector<SiteObservable> observe_sites(const DoubledState& state, const std::vector<double>& oracle,
                                          std::uint64_t shots, std::uint64_t seed, std::uint64_t point) {
  const int n = state.n();
  const std::vector<double> trained = spin_profile(state);
  std::vector<SiteObservable> out;
  for (int s = 0; s < n; ++s) {
    SiteObservable o;
    o.site = s;
    o.trained = trained[static_cast<std::size_t>(s)];
    o.oracle = oracle[static_cast<std::size_t>(s)];
    const DenseOperator z = site_operator(n, s, 'Z');
    try {
      const PostselectResult r =
          postselect_estimate(state, z, shots, derive_seed({seed, kShotStream, point, static_cast<std::uint64_t>(s)}));
      o.estimated = r.estimate;
      o.eta_hat = r.eta_hat;
      o.std_error = postselect_stddev(state, z, shots);
    } catch (const PostselectionStarved&) {
      o.estimated = std::numeric_limits<double>::quiet_NaN();
      o.std_error = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(o);
  }
  return out;
}

// Writes through a temporary file so that readers never see a partial table.
void write_file(const std::filesystem::path& path, const std::string& content, std::vector<std::string>& files) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
  files.push_back(path.string());
}

json record_json(const RunRecord& r) {
  return {{"final_cost", r.final_cost}, {"converged", r.converged}, {"status", r.status},
          {"iterations", r.iterations}, {"evaluations", r.evaluations}};
}

void write_meta(const ExperimentConfig& config, const std::filesystem::path& path, json summary, double wall,
                std::vector<std::string>& files) {
  json meta = {{"version", VOQE_VERSION},
               {"config", to_json(config)},
               {"summary", std::move(summary)},
               {"timing", {{"wall_seconds", wall}}}};
  write_file(path, meta.dump(2) + "\n", files);
}

int exit_code_for(const ExperimentConfig& config, int failures, int total) {
  if (total == 0) return 0;
  const double fraction = static_cast<double>(failures) / static_cast<double>(total);
  return fraction > config.run.max_failure_fraction ? 2 : 0;
}

ExperimentConfig resolved(const ExperimentConfig& config) {
  ExperimentConfig c = config;
  c.resolve();
  c.validate();
  return c;
}

AnsatzLayout layout_of(const ExperimentConfig& c) { return {c.ansatz.ladder, c.ansatz.cross}; }

}  // namespace

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

XxzResult xxz_sweep(const ExperimentConfig& config) {
  const ExperimentConfig c = resolved(config);
  const int n = c.model.n;
  const HpaCircuit circuit = xxz_ansatz(n, c.ansatz.depth, layout_of(c));
  std::mt19937_64 rng(derive_seed({c.run.seed, kInitStream}));
  RealVector theta = uniform_init(circuit.num_params(), c.ansatz.init_width, rng);

  XxzResult result;
  for (double eps : c.warmup_values()) {
    const LmeCost cost(circuit, build_lindblad_superop(driven_xxz(n, c.model.delta, eps)));
    RunRecord rec = minimize(as_cost(cost), theta, c.optimizer);
    rec.parameters = {{"epsilon", eps}, {"delta", c.model.delta}};
    rec.seed = c.run.seed;
    theta = rec.theta_final;
    result.warmup.push_back(std::move(rec));
  }

  const std::vector<double> schedule = c.eps_values();
  for (std::size_t p = 0; p < schedule.size(); ++p) {
    const double eps = schedule[p];
    const DenseOperator lhat = build_lindblad_superop(driven_xxz(n, c.model.delta, eps));
    const LmeCost cost(circuit, lhat);
    XxzPoint point;
    point.epsilon = eps;
    point.record = minimize(as_cost(cost), theta, c.optimizer);
    point.record.parameters = {{"epsilon", eps}, {"delta", c.model.delta}};
    point.record.seed = c.run.seed;
    theta = point.record.theta_final;

    DoubledState state = run_circuit(circuit, span_of(theta));
    canonicalize_sign(state);
    const std::vector<double> oracle = spin_profile(vectorize(exact_lme_steady_state(lhat)));
    point.sites = observe_sites(state, oracle, c.shots, c.run.seed, p);
    point.eta = diagonal_weight(state);
    point.accepted = point.record.final_cost < kLmeAcceptCost;
    point.physical = is_density_matrix_state(state, 1e-6);
    result.points.push_back(std::move(point));
  }
  return result;
}

IsingResult ising_spectrum(const ExperimentConfig& config) {
  const ExperimentConfig c = resolved(config);
  const int n = c.model.n;
  const HpaCircuit circuit = nhh_ansatz(n, c.ansatz.depth);
  const std::vector<double> kappas = c.kappa_values();
  const auto restarts = static_cast<std::size_t>(c.model.restarts);

  IsingResult result;
  result.points.resize(kappas.size());
  std::vector<NhhModel> models;
  for (std::size_t p = 0; p < kappas.size(); ++p) {
    models.push_back(imaginary_ising(n, c.model.lambda, kappas[p]));
    result.points[p].kappa = kappas[p];
    result.points[p].restarts.resize(restarts);
    result.points[p].oracle = exact_nhh_spectrum(models.back());
  }

  parallel_for(kappas.size() * restarts, c.run.jobs, [&](std::size_t task) {
    const std::size_t p = task / restarts;
    const std::size_t r = task % restarts;
    const NhhCost cost(circuit, models[p]);
    std::mt19937_64 rng(derive_seed({c.run.seed, kInitStream, p, r}));
    const RealVector theta0 =
        nhh_restart_init(n, circuit.num_params(), static_cast<int>(r), c.ansatz.init_width, rng);
    IsingRestart out;
    out.restart = static_cast<int>(r);
    out.record = minimize([&cost](std::span<const double> t, std::span<double> g) { return cost(t, g); }, theta0,
                          c.optimizer);
    out.record.parameters = {{"kappa", kappas[p]}, {"lambda", c.model.lambda}};
    out.record.seed = c.run.seed;
    out.eigenvalue = extract_nhh_eigenvalue(circuit, span_of(out.record.theta_final), models[p]);
    result.points[p].restarts[r] = std::move(out);
  });

  for (IsingPoint& point : result.points) {
    std::vector<Complex> accepted;
    for (const auto& r : point.restarts) {
      if (r.eigenvalue.reliable) accepted.push_back(r.eigenvalue.value);
    }
    point.clusters = cluster_eigenvalues(accepted, kSpectrumMatchRadius);
    for (const auto& e : point.oracle) {
      for (const Complex& a : accepted) {
        if (std::abs(a - e.value) <= kSpectrumMatchRadius) {
          ++point.covered;
          break;
        }
      }
    }
  }
  return result;
}

SingleResult single_run(const ExperimentConfig& config) {
  const ExperimentConfig c = resolved(config);
  const ModelConfig& m = c.model;
  std::mt19937_64 rng(derive_seed({c.run.seed, kInitStream}));
  SingleResult out;

  if (m.name == "ising") {
    const NhhModel model = imaginary_ising(m.n, m.lambda, m.kappa);
    const HpaCircuit circuit = nhh_ansatz(m.n, c.ansatz.depth);
    const NhhCost cost(circuit, model);
    const RealVector theta0 = nhh_restart_init(m.n, circuit.num_params(), 0, c.ansatz.init_width, rng);
    out.record = minimize([&cost](std::span<const double> t, std::span<double> g) { return cost(t, g); }, theta0,
                          c.optimizer);
    out.record.parameters = {{"lambda", m.lambda}, {"kappa", m.kappa}};
    out.state = run_circuit(circuit, span_of(out.record.theta_final));
    out.eigenvalue = extract_nhh_eigenvalue(circuit, span_of(out.record.theta_final), model);
  } else {
    LindbladModel model;
    if (m.name == "amplitude_damping") {
      model = amplitude_damping(m.rate);
    } else if (m.name == "balanced_pumping") {
      model = balanced_pumping(m.rate);
    } else {
      model = driven_xxz(m.n, m.delta, m.epsilon);
      out.record.parameters = {{"delta", m.delta}, {"epsilon", m.epsilon}};
    }
    const DenseOperator lhat = build_lindblad_superop(model);
    const HpaCircuit circuit = layered_ansatz(model.qubits(), c.ansatz.depth, layout_of(c));
    const LmeCost cost(circuit, lhat);
    const RealVector theta0 = uniform_init(circuit.num_params(), c.ansatz.init_width, rng);
    auto params = out.record.parameters;
    out.record = minimize(as_cost(cost), theta0, c.optimizer);
    out.record.parameters = params;
    out.state = run_circuit(circuit, span_of(out.record.theta_final));
    canonicalize_sign(out.state);
    const std::vector<double> oracle = spin_profile(vectorize(exact_lme_steady_state(lhat)));
    out.sites = observe_sites(out.state, oracle, c.shots, c.run.seed, 0);
  }
  out.record.seed = c.run.seed;
  out.eta = diagonal_weight(out.state);
  return out;
}

RunOutcome run_xxz(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentConfig c = resolved(config);
  const XxzResult result = xxz_sweep(c);
  const std::filesystem::path dir(c.run.out);
  std::filesystem::create_directories(dir);
  RunOutcome outcome;

  std::ostringstream table;
  table << "epsilon,site,trained,estimated,estimated_stderr,eta_hat,oracle,final_cost,iterations,accepted\n";
  std::ostringstream history;
  history << "phase,epsilon,iteration,cost\n";
  for (const auto& rec : result.warmup) {
    for (const auto& h : rec.cost_history)
      history << "warmup," << num(rec.parameters[0].second) << "," << h.iteration << "," << num(h.cost) << "\n";
  }
  json points = json::array();
  for (const XxzPoint& p : result.points) {
    for (const auto& s : p.sites) {
      table << num(p.epsilon) << "," << s.site << "," << num(s.trained) << "," << num(s.estimated) << ","
            << num(s.std_error) << "," << num(s.eta_hat) << "," << num(s.oracle) << "," << num(p.record.final_cost)
            << "," << p.record.iterations << "," << (p.accepted ? 1 : 0) << "\n";
    }
    for (const auto& h : p.record.cost_history)
      history << "sweep," << num(p.epsilon) << "," << h.iteration << "," << num(h.cost) << "\n";
    json rec = record_json(p.record);
    rec["epsilon"] = p.epsilon;
    rec["eta"] = p.eta;
    rec["accepted"] = p.accepted;
    rec["physical"] = p.physical;
    rec["theta_final"] = std::vector<double>(p.record.theta_final.data(),
                                             p.record.theta_final.data() + p.record.theta_final.size());
    points.push_back(rec);
    outcome.failures += p.accepted ? 0 : 1;
    ++outcome.total;
  }
  write_file(dir / "xxz.csv", table.str(), outcome.files);
  write_file(dir / "xxz_history.csv", history.str(), outcome.files);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_meta(c, dir / "xxz.meta.json", {{"points", points}, {"failures", outcome.failures}}, wall, outcome.files);
  outcome.exit_code = exit_code_for(c, outcome.failures, outcome.total);
  return outcome;
}

RunOutcome run_ising(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentConfig c = resolved(config);
  const IsingResult result = ising_spectrum(c);
  const std::filesystem::path dir(c.run.out);
  std::filesystem::create_directories(dir);
  RunOutcome outcome;

  std::ostringstream runs, oracle, clusters;
  runs << "kappa,restart,re,im,cost,accepted,iterations\n";
  oracle << "kappa,index,re,im,residual\n";
  clusters << "kappa,re,im,count\n";
  json summary = json::array();
  for (const IsingPoint& p : result.points) {
    for (const auto& r : p.restarts) {
      runs << num(p.kappa) << "," << r.restart << "," << num(r.eigenvalue.value.real()) << ","
           << num(r.eigenvalue.value.imag()) << "," << num(r.eigenvalue.cost) << "," << (r.eigenvalue.reliable ? 1 : 0)
           << "," << r.record.iterations << "\n";
      outcome.failures += r.eigenvalue.reliable ? 0 : 1;
      ++outcome.total;
    }
    for (std::size_t k = 0; k < p.oracle.size(); ++k) {
      oracle << num(p.kappa) << "," << k << "," << num(p.oracle[k].value.real()) << ","
             << num(p.oracle[k].value.imag()) << "," << num(p.oracle[k].residual) << "\n";
    }
    for (const auto& cl : p.clusters) {
      clusters << num(p.kappa) << "," << num(cl.center.real()) << "," << num(cl.center.imag()) << "," << cl.count
               << "\n";
    }
    summary.push_back({{"kappa", p.kappa},
                       {"covered", p.covered},
                       {"oracle_size", p.oracle.size()},
                       {"distinct", p.clusters.size()}});
  }
  write_file(dir / "ising.csv", runs.str(), outcome.files);
  write_file(dir / "ising_oracle.csv", oracle.str(), outcome.files);
  write_file(dir / "ising_clusters.csv", clusters.str(), outcome.files);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_meta(c, dir / "ising.meta.json", {{"points", summary}, {"failures", outcome.failures}}, wall, outcome.files);
  outcome.exit_code = exit_code_for(c, outcome.failures, outcome.total);
  return outcome;
}

RunOutcome run_single(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentConfig c = resolved(config);
  const SingleResult result = single_run(c);
  const std::filesystem::path dir(c.run.out);
  std::filesystem::create_directories(dir);
  RunOutcome outcome;

  std::ostringstream table, state, history;
  table << "site,trained,estimated,estimated_stderr,eta_hat,oracle\n";
  for (const auto& s : result.sites) {
    table << s.site << "," << num(s.trained) << "," << num(s.estimated) << "," << num(s.std_error) << ","
          << num(s.eta_hat) << "," << num(s.oracle) << "\n";
  }
  state << "i,j,re,im\n";
  for (Eigen::Index i = 0; i < result.state.side(); ++i)
    for (Eigen::Index j = 0; j < result.state.side(); ++j) {
      const Complex a = result.state.amplitude(i, j);
      state << i << "," << j << "," << num(a.real()) << "," << num(a.imag()) << "\n";
    }
  history << "iteration,cost\n";
  for (const auto& h : result.record.cost_history) history << h.iteration << "," << num(h.cost) << "\n";

  json summary = record_json(result.record);
  summary["eta"] = result.eta;
  const bool solved = result.eigenvalue ? result.eigenvalue->reliable : result.record.final_cost < kLmeAcceptCost;
  summary["solved"] = solved;
  if (result.eigenvalue) {
    summary["eigenvalue"] = {{"re", result.eigenvalue->value.real()}, {"im", result.eigenvalue->value.imag()}};
  }
  summary["theta_final"] = std::vector<double>(result.record.theta_final.data(),
                                               result.record.theta_final.data() + result.record.theta_final.size());
  write_file(dir / "single.csv", table.str(), outcome.files);
  write_file(dir / "single_state.csv", state.str(), outcome.files);
  write_file(dir / "single_history.csv", history.str(), outcome.files);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  outcome.total = 1;
  outcome.failures = solved ? 0 : 1;
  write_meta(c, dir / "single.meta.json", summary, wall, outcome.files);
  outcome.exit_code = exit_code_for(c, outcome.failures, outcome.total);
  return outcome;
}

RunOutcome run_experiment(const ExperimentConfig& config) {
  switch (config.experiment) {
    case Experiment::kXxz:
      return run_xxz(config);
    case Experiment::kIsing:
      return run_ising(config);
    case Experiment::kSingle:
      return run_single(config);
  }
  throw ConfigError("unknown experiment");
}

}  // namespace voqe

#include "swarmloc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "swarmloc/errors.hpp"
#include "swarmloc/report.hpp"

namespace swarmloc {

std::vector<int> default_checkpoints(int max_iterations) {
  std::vector<int> rows = {1, 2, 3, 4, 5, 10, 15, 20, 25};
  for (int t = 30; t <= 150; t += 10) rows.push_back(t);
  std::vector<int> out;
  for (int t : rows)
    if (t <= max_iterations) out.push_back(t);
  if (out.empty() || out.back() != max_iterations) out.push_back(max_iterations);
  return out;
}

void ExperimentConfig::validate() const {
  scenario.validate();
  noise.validate();
  pso.validate();
  tse.validate();
  if (scenario.n_sus < 1) throw ConfigError("n_sus", "localization needs at least one SU");
  if (trials < 1) throw ConfigError("trials", "must be >= 1");
  if (variants.empty()) throw ConfigError("variants", "at least one variant is required");
  if (!is_finite(emitter)) throw ConfigError("emitter", "must be finite");
  if (!(thresholds.pu_threshold > 0.0)) throw ConfigError("pu_threshold", "must be positive");
  if (!(thresholds.su_threshold > 0.0)) throw ConfigError("su_threshold", "must be positive");
  if (threads < 0) throw ConfigError("threads", "must be >= 0");
  for (int t : checkpoints)
    if (t < 1 || t > pso.max_iterations) throw ConfigError("checkpoints", "must lie in [1, iterations]");
}

MethodSpec MethodSpec::swarm(const VariantSpec& v, int iterations) {
  return {v.name, Kind::kSwarm, v, iterations};
}

MethodSpec MethodSpec::tse() {
  MethodSpec m;
  m.name = "TSE";
  m.kind = Kind::kTse;
  return m;
}

namespace {

Scenario trial_scenario(const ExperimentConfig& cfg, const Scenario& fixed, int trial) {
  if (!cfg.redeploy_per_trial) return fixed;
  DeployConfig dc = cfg.scenario;
  dc.seed = derive_seed(cfg.scenario.seed, Stream::kDeploy, {static_cast<std::uint64_t>(trial)});
  return deploy_network(dc).with_emitter(cfg.emitter);
}

TrialOutcome run_one_trial(const ExperimentConfig& cfg, const Scenario& fixed,
                           const std::vector<MethodSpec>& methods, const std::vector<int>& checkpoints,
                           int trial) {
  const Scenario scenario = trial_scenario(cfg, fixed, trial);
  Rng noise_rng = make_rng(cfg.master_seed, Stream::kNoise, {static_cast<std::uint64_t>(trial)});
  RangeDifferenceSet rds = synthesize(scenario, cfg.noise, noise_rng);

  TrialOutcome out;
  out.trial = trial;
  out.measurement_hash = rds.content_hash();
  const LocalizationObjective obj = LocalizationObjective::from_scenario(scenario, rds, false);

  for (const MethodSpec& m : methods) {
    MethodOutcome mo;
    if (m.kind == MethodSpec::Kind::kSwarm) {
      PsoConfig pc = cfg.pso;
      pc.variant = m.variant;
      pc.max_iterations = m.iterations;
      pc.seed = cfg.master_seed;
      pc.trial = static_cast<std::uint64_t>(trial);
      const RunTrace trace = run(pc, obj);
      mo.estimate = trace.estimate;
      mo.fitness = trace.estimate_fitness;
      mo.convergence_iteration = convergence_iteration(trace);
      mo.wall_seconds = trace.wall.count();
      for (int t : checkpoints)
        if (t <= m.iterations) mo.checkpoints.push_back(trace.records[static_cast<std::size_t>(t)].gbest_position);
    } else {
      const auto start = std::chrono::steady_clock::now();
      const LocalizationObjective wobj = LocalizationObjective::from_scenario(scenario, rds, cfg.tse.weighting);
      try {
        const TseResult r = tse_solve(wobj, cfg.tse);
        mo.estimate = r.estimate;
        mo.fitness = obj.fitness(r.estimate);
        mo.convergence_iteration = r.iterations_used;
      } catch (const DegeneracyError&) {
        mo.failed = true;
      } catch (const DivergenceError&) {
        mo.failed = true;
      }
      if (mo.failed) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        mo.estimate = {nan, nan};
        mo.fitness = std::numeric_limits<double>::infinity();
      }
      mo.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    mo.decision = classify(mo.estimate, scenario, cfg.thresholds);
    out.methods.push_back(std::move(mo));
  }
  return out;
}

}  // namespace

std::vector<TrialOutcome> run_trials(const ExperimentConfig& cfg, const std::vector<MethodSpec>& methods,
                                     const std::vector<int>& checkpoints) {
  cfg.validate();
  for (const MethodSpec& m : methods)
    if (m.kind == MethodSpec::Kind::kSwarm && m.iterations < 1)
      throw ConfigError("iterations", "method " + m.name + " needs at least one iteration");

  const Scenario fixed = deploy_network(cfg.scenario).with_emitter(cfg.emitter);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));

  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(cfg.trials));

  if (workers == 1) {
    for (int i = 0; i < cfg.trials; ++i)
      outcomes[static_cast<std::size_t>(i)] = run_one_trial(cfg, fixed, methods, checkpoints, i);
    return outcomes;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < cfg.trials; i = next++) {
          try {
            outcomes[static_cast<std::size_t>(i)] = run_one_trial(cfg, fixed, methods, checkpoints, i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = cfg.trials;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

ReportBundle build_report(const std::vector<MethodSpec>& methods, const std::vector<int>& checkpoints,
                          const std::vector<TrialOutcome>& outcomes, const Point& truth) {
  if (outcomes.empty()) throw UsageError("build_report: no trials");
  ReportBundle r;
  const double n = static_cast<double>(outcomes.size());

  for (std::size_t k = 0; k < methods.size(); ++k) {
    const MethodSpec& m = methods[k];

    ConvergenceRow conv;
    conv.variant = m.name;
    TrialErrorSet finals{{}, truth};
    std::vector<double> errors;
    int failures = 0;
    int puea = 0;
    for (const TrialOutcome& o : outcomes) {
      const MethodOutcome& mo = o.methods[k];
      conv.mean_iteration += mo.convergence_iteration;
      conv.mean_wall_seconds += mo.wall_seconds;
      if (mo.failed) {
        ++failures;
        errors.push_back(std::numeric_limits<double>::infinity());
        continue;
      }
      finals.estimates.push_back(mo.estimate);
      errors.push_back(distance(mo.estimate, truth));
      if (mo.decision.verdict == Verdict::PUEA) ++puea;
    }
    conv.mean_iteration /= n;
    conv.mean_wall_seconds /= n;
    r.convergence.push_back(conv);

    SummaryRow sum;
    sum.variant = m.name;
    if (!finals.estimates.empty()) sum.stats = error_stats(finals);
    const auto curve = cdf_curve(errors);
    sum.median_error = cdf_median(curve);
    sum.puea_rate = puea / n;
    sum.failures = failures;
    r.summary.push_back(sum);
    for (const CdfPoint& c : curve) r.cdf.push_back({m.name, c.z, c.F});

    if (m.kind == MethodSpec::Kind::kSwarm) {
      std::size_t slot = 0;
      for (int t : checkpoints) {
        if (t > m.iterations) continue;
        TrialErrorSet at{{}, truth};
        at.estimates.reserve(outcomes.size());
        for (const TrialOutcome& o : outcomes) at.estimates.push_back(o.methods[k].checkpoints[slot]);
        r.mse_vs_iteration.push_back({m.name, t, error_stats(at)});
        ++slot;
      }
    }
  }

  for (const TrialOutcome& o : outcomes)
    for (std::size_t k = 0; k < methods.size(); ++k)
      r.decisions.push_back({o.trial, methods[k].name, o.methods[k].decision});
  return r;
}

ReportBundle run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (!cfg.out_dir.empty()) ensure_writable_dir(cfg.out_dir);

  std::vector<MethodSpec> methods;
  for (const VariantSpec& v : cfg.variants) methods.push_back(MethodSpec::swarm(v, cfg.pso.max_iterations));
  const std::vector<int> checkpoints =
      cfg.checkpoints.empty() ? default_checkpoints(cfg.pso.max_iterations) : cfg.checkpoints;

  const auto outcomes = run_trials(cfg, methods, checkpoints);
  ReportBundle bundle = build_report(methods, checkpoints, outcomes, cfg.emitter);
  if (!cfg.out_dir.empty()) write_report(cfg.out_dir, bundle, cfg);
  return bundle;
}

std::vector<MseRow> sweep_iterations(const ExperimentConfig& cfg, const std::vector<VariantSpec>& variants,
                                     const std::vector<int>& checkpoints) {
  if (checkpoints.empty()) throw UsageError("sweep_iterations: no checkpoints");
  for (int t : checkpoints)
    if (t < 1 || t > cfg.pso.max_iterations)
      throw UsageError("sweep_iterations: checkpoint " + std::to_string(t) + " outside [1, " +
                       std::to_string(cfg.pso.max_iterations) + "]");
  if (variants.empty()) throw UsageError("sweep_iterations: no variants");

  std::vector<MethodSpec> methods;
  for (const VariantSpec& v : variants) methods.push_back(MethodSpec::swarm(v, cfg.pso.max_iterations));
  const auto outcomes = run_trials(cfg, methods, checkpoints);
  return build_report(methods, checkpoints, outcomes, cfg.emitter).mse_vs_iteration;
}

CdfComparison compare_cdf(const ExperimentConfig& cfg, int pso_iterations, int mpso11_iterations) {
  const std::vector<MethodSpec> methods = {
      MethodSpec::swarm(find_variant("PSO"), pso_iterations),
      MethodSpec::swarm(find_variant("MPSO11"), mpso11_iterations),
      MethodSpec::tse(),
  };
  const auto outcomes = run_trials(cfg, methods, {});
  const ReportBundle r = build_report(methods, {}, outcomes, cfg.emitter);

  CdfComparison out;
  for (std::size_t k = 0; k < methods.size(); ++k) {
    out.methods.push_back(methods[k].name);
    std::vector<CdfPoint> curve;
    for (const CdfRow& row : r.cdf)
      if (row.variant == methods[k].name) curve.push_back({row.z, row.F});
    out.medians.push_back(r.summary[k].median_error);
    out.failures.push_back(r.summary[k].failures);
    out.curves.push_back(std::move(curve));
  }
  return out;
}

}  // namespace swarmloc

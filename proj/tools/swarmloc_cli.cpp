// swarmloc: TDOA emitter localization and swarm-variant benchmarking.
//
//   swarmloc deploy    scenario CSV
//   swarmloc run       one trial with a verbose per-iteration trace
//   swarmloc mc        full Monte Carlo over the configured variants
//   swarmloc sweep     rms error vs iteration for selected variants
//   swarmloc cdf       error CDFs of PSO, MPSO11 and the Gauss-Newton baseline
//   swarmloc variants  the 39 variant names

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swarmloc/config.hpp"
#include "swarmloc/errors.hpp"
#include "swarmloc/experiment.hpp"
#include "swarmloc/report.hpp"

namespace fs = std::filesystem;
using namespace swarmloc;

namespace {

struct CommonOptions {
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> variants;
  std::optional<int> n_sus;
  std::optional<double> snr0_db;
  std::optional<std::string> emitter;
  std::optional<int> iterations;
  std::optional<int> threads;
  std::optional<std::string> out;
  bool no_noise = false;
  bool redeploy = false;
  std::vector<std::string> settings;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--config", o.config_file, "key = value configuration file");
  app->add_option("--seed", o.seed, "master seed");
  app->add_option("--trials", o.trials, "Monte Carlo trials");
  app->add_option("--variants", o.variants, "comma-separated variant names or 'all'");
  app->add_option("--n-sus", o.n_sus, "number of secondary users");
  app->add_option("--snr0-db", o.snr0_db, "SNR at the base station in dB");
  app->add_option("--emitter", o.emitter, "emitter position x,y in meters");
  app->add_option("--iterations", o.iterations, "swarm iterations T");
  app->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  app->add_option("--out", o.out, "output directory");
  app->add_flag("--no-noise", o.no_noise, "disable measurement noise");
  app->add_flag("--redeploy-per-trial", o.redeploy, "draw a fresh SU layout every trial");
  app->add_option("--set", o.settings, "extra key=value override (repeatable)");
}

ExperimentConfig build_config(const CommonOptions& o, ExperimentConfig cfg) {
  if (!o.config_file.empty()) load_config_file(cfg, o.config_file);
  for (const std::string& kv : o.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError(kv, "--set expects key=value");
    apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.seed) cfg.master_seed = *o.seed;
  if (o.trials) cfg.trials = *o.trials;
  if (o.variants) apply_setting(cfg, "variants", *o.variants);
  if (o.n_sus) cfg.scenario.n_sus = *o.n_sus;
  if (o.snr0_db) cfg.noise.snr0_db = *o.snr0_db;
  if (o.emitter) apply_setting(cfg, "emitter", *o.emitter);
  if (o.iterations) cfg.pso.max_iterations = *o.iterations;
  if (o.threads) cfg.threads = *o.threads;
  if (o.out) cfg.out_dir = *o.out;
  if (o.no_noise) cfg.noise.noise_enabled = false;
  if (o.redeploy) cfg.redeploy_per_trial = true;
  cfg.validate();
  return cfg;
}

template <typename Fn>
void emit(const fs::path& dir, const char* name, Fn&& fn) {
  if (dir.empty()) {
    fn(std::cout);
    return;
  }
  ensure_writable_dir(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw IoError("cannot write " + (dir / name).string());
  fn(out);
}

int cmd_deploy(const ExperimentConfig& cfg, bool seed_given) {
  DeployConfig dc = cfg.scenario;
  if (seed_given) dc.seed = cfg.master_seed;
  const Scenario s = deploy_network(dc).with_emitter(cfg.emitter);
  emit(cfg.out_dir, "scenario.csv", [&](std::ostream& o) { write_scenario_csv(o, s); });
  return 0;
}

int cmd_run(const ExperimentConfig& cfg) {
  const VariantSpec& v = cfg.variants.front();
  const Scenario s = deploy_network(cfg.scenario).with_emitter(cfg.emitter);
  Rng noise_rng = make_rng(cfg.master_seed, Stream::kNoise, {0});
  const RangeDifferenceSet rds = synthesize(s, cfg.noise, noise_rng);
  const LocalizationObjective obj = LocalizationObjective::from_scenario(s, rds);

  PsoConfig pc = cfg.pso;
  pc.variant = v;
  pc.seed = cfg.master_seed;
  pc.trial = 0;
  const RunTrace trace = run(pc, obj);
  const DetectionDecision d = classify(trace.estimate, s, cfg.thresholds);

  emit(cfg.out_dir, "trace.csv", [&](std::ostream& o) { write_trace_csv(o, trace); });
  if (!cfg.out_dir.empty()) {
    emit(cfg.out_dir, "scenario.csv", [&](std::ostream& o) { write_scenario_csv(o, s); });
    emit(cfg.out_dir, "range_differences.csv", [&](std::ostream& o) { write_range_differences_csv(o, rds); });
    emit(cfg.out_dir, "decision.json", [&](std::ostream& o) { o << to_json(d) << '\n'; });
  }
  std::fprintf(stderr, "%s: estimate (%.3f, %.3f) error %.3f m, converged at iteration %d, %.4f s\n",
               v.name.c_str(), trace.estimate.x, trace.estimate.y, distance(trace.estimate, cfg.emitter),
               convergence_iteration(trace), trace.wall.count());
  std::fprintf(stderr, "decision: %s\n", to_json(d).c_str());
  return 0;
}

int cmd_mc(ExperimentConfig cfg) {
  if (cfg.out_dir.empty()) cfg.out_dir = "swarmloc-out";
  const ReportBundle r = run_experiment(cfg);
  std::printf("%-8s %10s %10s %10s %10s\n", "variant", "conv_iter", "rms_m", "median_m", "puea_rate");
  for (std::size_t k = 0; k < r.summary.size(); ++k)
    std::printf("%-8s %10.1f %10.2f %10.2f %10.3f\n", r.summary[k].variant.c_str(), r.convergence[k].mean_iteration,
                r.summary[k].stats.rms, r.summary[k].median_error, r.summary[k].puea_rate);
  std::printf("wrote %s\n", cfg.out_dir.string().c_str());
  return 0;
}

int cmd_sweep(const ExperimentConfig& cfg) {
  const std::vector<int> checkpoints =
      cfg.checkpoints.empty() ? default_checkpoints(cfg.pso.max_iterations) : cfg.checkpoints;
  const auto rows = sweep_iterations(cfg, cfg.variants, checkpoints);
  emit(cfg.out_dir, "mse_vs_iteration.csv", [&](std::ostream& o) { write_mse_csv(o, rows); });
  return 0;
}

int cmd_cdf(const ExperimentConfig& cfg, int pso_iterations, int mpso11_iterations) {
  const CdfComparison c = compare_cdf(cfg, pso_iterations, mpso11_iterations);
  std::vector<CdfRow> rows;
  for (std::size_t k = 0; k < c.methods.size(); ++k)
    for (const CdfPoint& p : c.curves[k]) rows.push_back({c.methods[k], p.z, p.F});
  emit(cfg.out_dir, "cdf.csv", [&](std::ostream& o) { write_cdf_csv(o, rows); });
  for (std::size_t k = 0; k < c.methods.size(); ++k)
    std::fprintf(stderr, "%-8s median error %.2f m (%d failed)\n", c.methods[k].c_str(), c.medians[k], c.failures[k]);
  return 0;
}

int cmd_variants() {
  std::printf("name,inertia,accel\n");
  for (const VariantSpec& v : variant_table())
    std::printf("%s,%s,%s\n", v.name.c_str(), to_string(v.inertia).c_str(), to_string(v.accel).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TDOA emitter localization with particle swarm variants"};
  app.require_subcommand(1);

  CommonOptions deploy_opts, run_opts, mc_opts, sweep_opts, cdf_opts;
  auto* deploy = app.add_subcommand("deploy", "emit the scenario CSV");
  add_common(deploy, deploy_opts);
  auto* run_cmd = app.add_subcommand("run", "single trial with per-iteration trace");
  add_common(run_cmd, run_opts);
  auto* mc = app.add_subcommand("mc", "full Monte Carlo experiment");
  add_common(mc, mc_opts);
  auto* sweep = app.add_subcommand("sweep", "rms error at each iteration checkpoint");
  add_common(sweep, sweep_opts);
  auto* cdf = app.add_subcommand("cdf", "error CDFs of PSO, MPSO11 and TSE");
  add_common(cdf, cdf_opts);
  int cdf_pso_iterations = 150;
  int cdf_mpso_iterations = 10;
  cdf->add_option("--pso-iterations", cdf_pso_iterations, "iterations for standard PSO");
  cdf->add_option("--mpso11-iterations", cdf_mpso_iterations, "iterations for MPSO11");
  auto* variants = app.add_subcommand("variants", "list variant names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*variants) return cmd_variants();
    if (*deploy) return cmd_deploy(build_config(deploy_opts, {}), deploy_opts.seed.has_value());
    if (*run_cmd) {
      ExperimentConfig base;
      base.variants = {find_variant("MPSO11")};
      return cmd_run(build_config(run_opts, base));
    }
    if (*mc) return cmd_mc(build_config(mc_opts, {}));
    if (*sweep) {
      ExperimentConfig base;
      base.variants = resolve_variants("PSO,PSO10,PSO12,MPSO10,MPSO11,MPSO12,IPSO11,IPSO12");
      return cmd_sweep(build_config(sweep_opts, base));
    }
    if (*cdf) {
      ExperimentConfig base;
      base.scenario.n_sus = 10;
      return cmd_cdf(build_config(cdf_opts, base), cdf_pso_iterations, cdf_mpso_iterations);
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "swarmloc: configuration error: %s\n", e.what());
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "swarmloc: usage error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "swarmloc: I/O error: %s\n", e.what());
    return 4;
  } catch (const Error& e) {
    std::fprintf(stderr, "swarmloc: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "swarmloc: unexpected error: %s\n", e.what());
    return 1;
  }
  return 0;
}

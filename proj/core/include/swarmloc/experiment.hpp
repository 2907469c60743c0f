#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "swarmloc/detector.hpp"
#include "swarmloc/measurement.hpp"
#include "swarmloc/metrics.hpp"
#include "swarmloc/pso.hpp"
#include "swarmloc/scenario.hpp"
#include "swarmloc/schedules.hpp"
#include "swarmloc/tse.hpp"

namespace swarmloc {

/// Iteration rows of the MSE-vs-iteration table.
std::vector<int> default_checkpoints(int max_iterations);

struct ExperimentConfig {
  DeployConfig scenario;
  NoiseModel noise;
  PsoConfig pso;  // variant field unused; variants come from `variants`
  TseConfig tse;
  std::vector<VariantSpec> variants = variant_table();
  int trials = 1000;
  Point emitter{8000.0, 1000.0};
  DetectorThresholds thresholds;
  std::filesystem::path out_dir;
  std::uint64_t master_seed = 1;
  bool redeploy_per_trial = false;
  int threads = 0;               // 0 = hardware concurrency
  std::vector<int> checkpoints;  // empty = default_checkpoints(T)

  void validate() const;
};

/// A localization method evaluated per trial: a swarm variant with its own
/// iteration budget, or the Gauss-Newton baseline.
struct MethodSpec {
  enum class Kind { kSwarm, kTse };
  std::string name;
  Kind kind = Kind::kSwarm;
  VariantSpec variant{};
  int iterations = 0;

  static MethodSpec swarm(const VariantSpec& v, int iterations);
  static MethodSpec tse();
};

struct MethodOutcome {
  Point estimate;
  double fitness = 0.0;
  int convergence_iteration = 0;
  double wall_seconds = 0.0;
  bool failed = false;             // TSE raised degeneracy/divergence
  std::vector<Point> checkpoints;  // gbest at each checkpoint (swarm only)
  DetectionDecision decision;
};

struct TrialOutcome {
  int trial = 0;
  std::uint64_t measurement_hash = 0;
  std::vector<MethodOutcome> methods;  // same order as the method list
};

/// Runs every method on every trial. Each trial draws one measurement set
/// shared by all methods. Outcomes are returned in trial order and do not
/// depend on the thread count.
std::vector<TrialOutcome> run_trials(const ExperimentConfig& cfg,
                                     const std::vector<MethodSpec>& methods,
                                     const std::vector<int>& checkpoints);

struct ConvergenceRow {
  std::string variant;
  double mean_iteration = 0.0;
  double mean_wall_seconds = 0.0;
};

struct MseRow {
  std::string variant;
  int t = 0;
  ErrorStats stats;
};

struct CdfRow {
  std::string variant;
  double z = 0.0;
  double F = 0.0;
};

struct SummaryRow {
  std::string variant;
  ErrorStats stats;
  double median_error = 0.0;
  double puea_rate = 0.0;
  int failures = 0;
};

struct DecisionRow {
  int trial = 0;
  std::string variant;
  DetectionDecision decision;
};

struct ReportBundle {
  std::vector<ConvergenceRow> convergence;
  std::vector<MseRow> mse_vs_iteration;
  std::vector<CdfRow> cdf;
  std::vector<SummaryRow> summary;
  std::vector<DecisionRow> decisions;
};

/// Aggregates outcomes into report tables. Reductions run in trial order.
ReportBundle build_report(const std::vector<MethodSpec>& methods,
                          const std::vector<int>& checkpoints,
                          const std::vector<TrialOutcome>& outcomes, const Point& truth);

/// Full Monte Carlo over cfg.variants. Writes the bundle to cfg.out_dir when
/// it is set; the directory is checked for writability before any trial runs.
ReportBundle run_experiment(const ExperimentConfig& cfg);

/// RMS error of the gbest position at each checkpoint for each variant.
/// Throws UsageError for checkpoints outside [1, T].
std::vector<MseRow> sweep_iterations(const ExperimentConfig& cfg,
                                     const std::vector<VariantSpec>& variants,
                                     const std::vector<int>& checkpoints);

struct CdfComparison {
  std::vector<std::string> methods;
  std::vector<std::vector<CdfPoint>> curves;
  std::vector<double> medians;
  std::vector<int> failures;
};

/// Empirical error CDFs of PSO (150 iterations), MPSO11 (10 iterations) and
/// the Gauss-Newton baseline, all fed identical per-trial measurements.
CdfComparison compare_cdf(const ExperimentConfig& cfg, int pso_iterations = 150,
                          int mpso11_iterations = 10);

}  // namespace swarmloc

#include "swarmloc/pso.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <tuple>

#include "swarmloc/errors.hpp"
#include "swarmloc/report.hpp"

namespace swarmloc {

InertiaSchedule PsoConfig::inertia() const {
  InertiaSchedule s = inertia_params;
  s.label = variant.inertia;
  return s;
}

void PsoConfig::validate() const {
  if (swarm_size < 2) throw ConfigError("swarm_size", "must be >= 2");
  if (max_iterations < 1) throw ConfigError("iterations", "must be >= 1");
  if (!(bound > 0.0) || !std::isfinite(bound)) throw ConfigError("bound", "must be positive");
  if (!(velocity_limit() > 0.0)) throw ConfigError("v_max", "must be positive");
  const InertiaSchedule& s = inertia_params;
  if (!(s.w_max > s.w_min && s.w_min > 0.0)) throw ConfigError("inertia", "requires w_max > w_min > 0");
  if (!(s.chaos_seed > 0.0 && s.chaos_seed < 1.0)) throw ConfigError("inertia", "chaos seed must lie in (0, 1)");
}

void update_particle(Particle& p, const Point& gbest, const StepCoeffs& k, const Point& r1,
                     const Point& r2, double v_max, double bound) {
  auto axis = [&](double& x, double& v, double pb, double gb, double a, double b) {
    v = k.w * v + k.c1 * a * (pb - x) + k.c2 * b * (gb - x);
    v = std::clamp(v, -v_max, v_max);
    x = std::clamp(x + v, -bound, bound);
  };
  axis(p.position.x, p.velocity.x, p.pbest.x, gbest.x, r1.x, r2.x);
  axis(p.position.y, p.velocity.y, p.pbest.y, gbest.y, r1.y, r2.y);
}

namespace {

void refresh_gbest(Swarm& swarm) {
  for (const Particle& p : swarm.particles) {
    if (p.pbest_fitness < swarm.gbest_fitness) {
      swarm.gbest_fitness = p.pbest_fitness;
      swarm.gbest = p.pbest;
    } else if (p.pbest_fitness == swarm.gbest_fitness && p.pbest != swarm.gbest &&
               std::tie(p.pbest.x, p.pbest.y) < std::tie(swarm.gbest.x, swarm.gbest.y)) {
      // exact ties among newcomers resolve by position, not visiting order
      swarm.gbest = p.pbest;
    }
  }
}

}  // namespace

Swarm init_swarm(const PsoConfig& cfg, const FitnessFn& f) {
  cfg.validate();
  Swarm swarm;
  swarm.schedule = ScheduleState(cfg.inertia_params.chaos_seed,
                                 make_rng(cfg.seed, Stream::kSchedule, {cfg.trial}));
  swarm.particles.reserve(static_cast<std::size_t>(cfg.swarm_size));
  for (int j = 0; j < cfg.swarm_size; ++j) {
    Particle p;
    p.id = static_cast<std::uint32_t>(j);
    p.rng = make_rng(cfg.seed, Stream::kParticle, {cfg.trial, p.id});
    p.position.x = uniform(p.rng, -cfg.bound, cfg.bound);
    p.position.y = uniform(p.rng, -cfg.bound, cfg.bound);
    p.pbest = p.position;
    p.pbest_fitness = f(p.position);
    swarm.particles.push_back(std::move(p));
  }
  swarm.gbest = swarm.particles.front().pbest;
  swarm.gbest_fitness = swarm.particles.front().pbest_fitness;
  refresh_gbest(swarm);
  return swarm;
}

void step(Swarm& swarm, int t, const PsoConfig& cfg, const FitnessFn& f) {
  const int T = cfg.max_iterations;
  if (t < 0 || t >= T) throw UsageError("step: iteration out of range");
  const AccelCoeffs c = accel_coeffs(cfg.variant.accel, t, T);
  const StepCoeffs k{inertia_weight(cfg.inertia(), t, T, swarm.schedule), c.c1, c.c2};
  const double v_max = cfg.velocity_limit();
  const Point gbest = swarm.gbest;

  for (Particle& p : swarm.particles) {
    Point r1, r2;
    r1.x = uniform01(p.rng);
    r1.y = uniform01(p.rng);
    r2.x = uniform01(p.rng);
    r2.y = uniform01(p.rng);
    update_particle(p, gbest, k, r1, r2, v_max, cfg.bound);
    const double fx = f(p.position);
    if (fx < p.pbest_fitness) {
      p.pbest_fitness = fx;
      p.pbest = p.position;
    }
  }
  refresh_gbest(swarm);
}

RunTrace run(const PsoConfig& cfg, const FitnessFn& f) {
  const auto start = std::chrono::steady_clock::now();
  Swarm swarm = init_swarm(cfg, f);
  RunTrace trace;
  trace.records.reserve(static_cast<std::size_t>(cfg.max_iterations) + 1);
  trace.records.push_back({0, swarm.gbest_fitness, swarm.gbest});
  for (int t = 0; t < cfg.max_iterations; ++t) {
    step(swarm, t, cfg, f);
    trace.records.push_back({t + 1, swarm.gbest_fitness, swarm.gbest});
  }
  trace.estimate = swarm.gbest;
  trace.estimate_fitness = swarm.gbest_fitness;
  trace.wall = std::chrono::steady_clock::now() - start;
  return trace;
}

RunTrace run(const PsoConfig& cfg, const LocalizationObjective& obj) {
  return run(cfg, [&obj](const Point& p) { return obj.fitness(p); });
}

int convergence_iteration(const RunTrace& trace, double rel_tol) {
  if (trace.records.empty()) throw UsageError("convergence_iteration: empty trace");
  if (!(rel_tol > 0.0)) throw UsageError("convergence_iteration: rel_tol must be positive");
  const double final_value = trace.records.back().gbest_fitness;
  const double target = final_value > 0.0 ? (1.0 + rel_tol) * final_value : 1e-6;
  for (const TraceRecord& r : trace.records)
    if (r.gbest_fitness <= target) return r.t;
  return trace.records.back().t;
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  out << "t,gbest_fitness,x,y\n";
  for (const TraceRecord& r : trace.records)
    out << r.t << ',' << format_double(r.gbest_fitness) << ',' << format_double(r.gbest_position.x) << ','
        << format_double(r.gbest_position.y) << '\n';
}

}  // namespace swarmloc

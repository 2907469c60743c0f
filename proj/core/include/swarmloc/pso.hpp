#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "swarmloc/geometry.hpp"
#include "swarmloc/objective.hpp"
#include "swarmloc/random.hpp"
#include "swarmloc/schedules.hpp"

namespace swarmloc {

using FitnessFn = std::function<double(const Point&)>;

struct PsoConfig {
  int swarm_size = 40;
  int max_iterations = 150;
  double bound = 110'000.0;         // search square is [-bound, bound]^2
  std::optional<double> v_max;      // defaults to 20% of the search range
  VariantSpec variant{"PSO", InertiaLabel::W0, AccelLabel::A1};
  InertiaSchedule inertia_params;   // label is taken from `variant`
  std::uint64_t seed = 1;
  std::uint64_t trial = 0;

  double velocity_limit() const { return v_max.value_or(0.2 * 2.0 * bound); }
  InertiaSchedule inertia() const;
  void validate() const;
};

/// A particle owns its random stream, seeded from (seed, trial, id), so the
/// order in which particles are visited never changes a run.
struct Particle {
  std::uint32_t id = 0;
  Point position;
  Point velocity;
  Point pbest;
  double pbest_fitness = 0.0;
  Rng rng;
};

struct Swarm {
  std::vector<Particle> particles;
  Point gbest;
  double gbest_fitness = 0.0;
  ScheduleState schedule{0.3, Rng{}};
};

struct StepCoeffs {
  double w;
  double c1;
  double c2;
};

/// Velocity and position update for one particle with explicit random
/// factors r1, r2 (one per dimension). Velocity is clamped to +-v_max and
/// position to [-bound, bound] componentwise. Does not touch pbest.
void update_particle(Particle& p, const Point& gbest, const StepCoeffs& k, const Point& r1,
                     const Point& r2, double v_max, double bound);

/// Uniform positions over the search square, zero velocities.
Swarm init_swarm(const PsoConfig& cfg, const FitnessFn& f);

/// One synchronous iteration at 0-based iteration t: every particle moves
/// against the gbest from the start of the iteration, then bests are updated
/// on strict improvement.
void step(Swarm& swarm, int t, const PsoConfig& cfg, const FitnessFn& f);

struct TraceRecord {
  int t;
  double gbest_fitness;
  Point gbest_position;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// records[t] holds the global best after t iterations, t = 0..T.
struct RunTrace {
  std::vector<TraceRecord> records;
  Point estimate;
  double estimate_fitness = 0.0;
  std::chrono::duration<double> wall{0.0};
};

RunTrace run(const PsoConfig& cfg, const FitnessFn& f);
RunTrace run(const PsoConfig& cfg, const LocalizationObjective& obj);

/// First iteration whose global best is within (1 + rel_tol) of the final
/// value; against an absolute floor of 1e-6 when the final value is zero.
int convergence_iteration(const RunTrace& trace, double rel_tol = 0.05);

/// CSV with header `t,gbest_fitness,x,y`.
void write_trace_csv(std::ostream& out, const RunTrace& trace);

}  // namespace swarmloc

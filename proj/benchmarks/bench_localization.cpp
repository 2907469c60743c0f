#include <benchmark/benchmark.h>

#include "swarmloc/pso.hpp"
#include "swarmloc/tse.hpp"

namespace {

using namespace swarmloc;

LocalizationObjective make_objective(int n_sus) {
  DeployConfig dc;
  dc.n_sus = n_sus;
  const Scenario s = deploy_network(dc).with_emitter({8000, 1000});
  Rng rng(1);
  return LocalizationObjective::from_scenario(s, synthesize(s, {}, rng));
}

void BM_Fitness(benchmark::State& state) {
  const auto obj = make_objective(static_cast<int>(state.range(0)));
  Point p{7000, 2000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(obj.fitness(p));
    p.x += 1e-3;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Fitness)->Arg(10)->Arg(100);

void BM_SwarmRun(benchmark::State& state) {
  const auto obj = make_objective(100);
  PsoConfig cfg;
  cfg.variant = find_variant("MPSO11");
  cfg.max_iterations = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(cfg, obj).estimate);
    ++cfg.trial;
  }
}
BENCHMARK(BM_SwarmRun)->Arg(10)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_TseSolve(benchmark::State& state) {
  DeployConfig dc;
  dc.n_sus = static_cast<int>(state.range(0));
  const Scenario s = deploy_network(dc).with_emitter({8000, 1000});
  Rng rng(1);
  const auto obj = LocalizationObjective::from_scenario(s, synthesize(s, {}, rng), true);
  for (auto _ : state) benchmark::DoNotOptimize(tse_solve(obj).estimate);
}
BENCHMARK(BM_TseSolve)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

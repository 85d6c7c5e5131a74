#include <benchmark/benchmark.h>

#include <random>

#include "octoem/field_ops.hpp"
#include "octoem/scenarios.hpp"
#include "octoem/solver.hpp"

using namespace octoem;

namespace {

OctonField random_field(int n) {
  std::mt19937_64 rng(17);
  OctonField f(Grid3::cube(n, 1.0));
  for (Octon& o : f.data) o = random_octon(rng);
  return f;
}

void Partial(benchmark::State& state) {
  const OctonField f = random_field(static_cast<int>(state.range(0)));
  OctonField out;
  for (auto _ : state) {
    partial_into(f, 2, out);
    benchmark::DoNotOptimize(out.data.data());
  }
  state.SetBytesProcessed(state.iterations() * f.size() * sizeof(Octon) * 2);
}
BENCHMARK(Partial)->Arg(16)->Arg(32)->Arg(64);

void NablaApply(benchmark::State& state) {
  const OctonField f = random_field(static_cast<int>(state.range(0)));
  OctonField out, scratch;
  for (auto _ : state) {
    nabla_apply_into(f, out, scratch);
    benchmark::DoNotOptimize(out.data.data());
  }
}
BENCHMARK(NablaApply)->Arg(16)->Arg(32)->Arg(64);

void Laplacian(benchmark::State& state) {
  const OctonField f = random_field(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(laplacian(f));
  }
}
BENCHMARK(Laplacian)->Arg(16)->Arg(32);

void SolverStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid3 g = Grid3::cube(n, 1.0);
  Scenario sc;
  sc.kind = ScenarioKind::PlaneWave;
  sc.waves = {PlaneWaveComponent{1.0, {0, 0, 1}, {1.0, 0.0, 0.0}, 0.0}};
  ScenarioState st = init_scenario(sc, g, UnitsConfig{});
  SolverConfig cfg;
  cfg.dt = default_dt(g, 1.0);
  for (auto _ : state) {
    step(st.state, cfg, st.source, UnitsConfig{});
    benchmark::DoNotOptimize(st.state.E.data.data());
  }
  state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(SolverStep)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

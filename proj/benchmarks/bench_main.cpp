#include <benchmark/benchmark.h>

#include <cmath>

#include "swelab/fluxes.hpp"
#include "swelab/scheme.hpp"
#include "swelab/solver.hpp"

namespace {

using namespace swelab;

const PhysConstants kC{};

void BM_RoeFlux(benchmark::State& state) {
  const PhysState l{1.0, 0.3};
  const PhysState r{0.6, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(roe_flux(l, r, kC));
}
BENCHMARK(BM_RoeFlux);

void BM_OmegaFlux(benchmark::State& state) {
  const PhysState l{1.0, 0.3};
  const PhysState r{0.6, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(omega_flux(l, r, 0.5, 0.1, 0.01, kC));
}
BENCHMARK(BM_OmegaFlux);

void BM_InterfaceTerms(benchmark::State& state) {
  SchemeConfig cfg;
  cfg.scheme = implemented_schemes()[state.range(0)];
  state.SetLabel(std::string(to_string(cfg.scheme)));
  const ExtState L{{0.6, 0.2}, 0.5};
  const ExtState R{{0.1, 0.05}, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(interface_terms(L, R, cfg, 0.1, 0.01, kC));
}
BENCHMARK(BM_InterfaceTerms)->DenseRange(0, 6);

// One full step over the Test 2 bump with moving water.
void BM_Step(benchmark::State& state) {
  SchemeConfig cfg;
  cfg.scheme = implemented_schemes()[state.range(0)];
  state.SetLabel(std::string(to_string(cfg.scheme)));
  SimSpec spec;
  spec.grid = {0.0, 25.0, static_cast<int>(state.range(1))};
  spec.bathymetry = [](double x) { return (x > 8 && x < 12) ? -0.2 + 0.05 * (x - 10) * (x - 10) : 0.0; };
  spec.initial = [](double, double) { return PhysState{0.33, 0.18}; };
  spec.bc = {SideCondition::discharge(0.18), SideCondition::depth(0.33)};
  const SimState s = initial_state(spec, kC);
  const double dt = cfl_dt(s, cfg, spec.grid, kC);
  for (auto _ : state) benchmark::DoNotOptimize(step(s, cfg, spec.grid, spec.bc, dt, kC));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_Step)->ArgsProduct({{0, 1, 2, 5, 6}, {200, 3200}});

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "dcsim/analysis/freq.hpp"
#include "dcsim/analysis/poles.hpp"
#include "dcsim/control/ladrc.hpp"
#include "dcsim/engine/integrator.hpp"
#include "dcsim/engine/simulation.hpp"
#include "dcsim/plant/grid.hpp"
#include "dcsim/scenario/catalog.hpp"

using namespace dcsim;

static void BM_Rk4Step37States(benchmark::State& state) {
  // Same state dimension as the twelve-module system.
  std::vector<double> x(37, 1.0);
  Rk4Scratch scratch;
  auto f = [](double, const std::vector<double>& s, std::vector<double>& d) {
    for (std::size_t i = 0; i < s.size(); ++i) d[i] = -0.3 * s[i] + (i ? 0.1 * s[i - 1] : 0.0);
  };
  double t = 0.0;
  for (auto _ : state) {
    rk4_step(f, t, 2e-6, x, scratch);
    t += 2e-6;
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_Rk4Step37States);

static void BM_RectifiedVoltage(benchmark::State& state) {
  const GridParams grid{};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rectified_voltage(t, grid));
    t += 2e-6;
  }
}
BENCHMARK(BM_RectifiedVoltage);

static void BM_LesoUpdate(benchmark::State& state) {
  Leso leso(leso_gains(2800.0), 1e8);
  double k = 0.0;
  for (auto _ : state) {
    leso.update(std::sin(k), 0.1, 1.0 / 15000.0);
    k += 0.01;
    benchmark::DoNotOptimize(leso.z3());
  }
}
BENCHMARK(BM_LesoUpdate);

static void BM_SimulationMillisecond(benchmark::State& state) {
  Scenario s = catalog_scenario("fig11_aladrc");
  s.clock.t_end = 1e-3;
  for (auto _ : state) {
    const SimResult sim = run_simulation(s);
    benchmark::DoNotOptimize(sim.final_u_bus);
  }
}
BENCHMARK(BM_SimulationMillisecond)->Unit(benchmark::kMillisecond);

static void BM_FreqResponse(benchmark::State& state) {
  const RationalTf tf{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0, 7.0, 1.0}};
  const auto grid = log_space(0.1, 1e5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(freq_response(tf, grid));
}
BENCHMARK(BM_FreqResponse)->Arg(100)->Arg(1000);

static void BM_PolyRoots8(benchmark::State& state) {
  std::vector<double> poly{1.0};
  for (int i = 0; i < 8; ++i) poly = poly_mul(poly, {static_cast<double>(i + 2), 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(poly));
}
BENCHMARK(BM_PolyRoots8);

BENCHMARK_MAIN();

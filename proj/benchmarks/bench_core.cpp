#include <benchmark/benchmark.h>

#include "kerrmet/bounds.hpp"
#include "kerrmet/fock.hpp"
#include "kerrmet/geometry.hpp"
#include "kerrmet/interferometer.hpp"
#include "kerrmet/sweep.hpp"

using namespace kerrmet;

namespace {

Geometry earth_geometry() { return Geometry::make(8.87e-3, 6.37e6, 10.0, 0.01, 1.0); }

void BM_CoherentState(benchmark::State& state) {
  const double n_a = static_cast<double>(state.range(0));
  const int cutoff = default_cutoff(n_a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherent_state(std::sqrt(n_a), cutoff));
  }
}
BENCHMARK(BM_CoherentState)->Arg(4)->Arg(100)->Arg(10000);

void BM_KerrEvolve(benchmark::State& state) {
  const double n_a = static_cast<double>(state.range(0));
  const Probe probe = Probe::from_photon_number(n_a, 1.0, 0.5);
  const FockState base = coherent_state(probe.alpha, default_cutoff(n_a));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kerr_evolve(base, probe, 0.7));
  }
}
BENCHMARK(BM_KerrEvolve)->Arg(100)->Arg(10000);

void BM_NumericQfi(benchmark::State& state) {
  const Probe probe = Probe::from_photon_number(static_cast<double>(state.range(0)), 1.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_qfi(probe, 0.7).value);
  }
}
BENCHMARK(BM_NumericQfi)->Arg(4)->Arg(100);

void BM_QuadratureVariance(benchmark::State& state) {
  const Geometry g = earth_geometry();
  const Probe probe = Probe::from_photon_number(1e17, 1e14, 0.1);
  const DerivedPhases phases = derived_phases(probe, g);
  const ArmTimes times = arm_proper_times(g);
  const OptimalSettings opt = optimal_settings(probe, phases, times);
  MeasurementPlan plan;
  plan.theta = opt.theta;
  plan.beta = opt.beta;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature_variance(plan, probe, phases, times));
  }
}
BENCHMARK(BM_QuadratureVariance);

void BM_MonteCarlo(benchmark::State& state) {
  const Geometry g = earth_geometry();
  const Probe probe = Probe::from_photon_number(1e17, 1e14, 0.1);
  const DerivedPhases phases = derived_phases(probe, g);
  const OptimalSettings opt = optimal_settings(probe, phases, arm_proper_times(g));
  MeasurementPlan plan;
  plan.theta = opt.theta;
  plan.beta = opt.beta;
  plan.measurements = 1e10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo_estimate(probe, g, plan, static_cast<std::uint64_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_MonteCarlo)->Arg(1000)->Arg(10000);

void BM_Sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.decade_min = 10.0;
  spec.decade_max = 20.0;
  spec.points_per_decade = static_cast<int>(state.range(0));
  spec.chi_values = {1e-6, 1e-2, 0.1, 1.0, 6.0};
  spec.geometry = earth_geometry();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_csv(run_sweep(spec)));
  }
}
BENCHMARK(BM_Sweep)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

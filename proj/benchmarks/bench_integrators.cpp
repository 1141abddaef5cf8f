// Microbenchmarks: per-step cost of each integrator, the Kepler solver and
// the diagnostics tracker on the reference orbit.
#include <benchmark/benchmark.h>

#include <kepler/anomaly.hpp>
#include <kepler/baseline.hpp>
#include <kepler/diagnostics.hpp>
#include <kepler/mtpi.hpp>

namespace {

using namespace kepler;

const Vec3 kQ0{100.0, 0.0, 0.1};
const Vec3 kP0{0.0, 0.01, 0.0};
const PhysParams kParams{0.5, 3.0};

void BM_MtpiStep(benchmark::State& state) {
  mtpi::State s = mtpi::init(kQ0, kP0, 10.0, kParams);
  for (auto _ : state) {
    mtpi::StepResult r = mtpi::step(s);
    s = r.state;
    benchmark::DoNotOptimize(r.output);
  }
}
BENCHMARK(BM_MtpiStep);

void BM_Rk4Step(benchmark::State& state) {
  PhaseState s{kQ0, kP0, 0.0};
  for (auto _ : state) {
    s = baseline::rk4_step(s, kParams, 0.02);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_LeapfrogStep(benchmark::State& state) {
  PhaseState s{kQ0, kP0, 0.0};
  for (auto _ : state) {
    s = baseline::leapfrog_step(s, kParams, 0.01);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_LeapfrogStep);

void BM_Composition4Step(benchmark::State& state) {
  PhaseState s{kQ0, kP0, 0.0};
  for (auto _ : state) {
    s = baseline::composition4_step(s, kParams, 0.02);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Composition4Step);

void BM_SolveKepler(benchmark::State& state) {
  double mean = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(anomaly::solve_kepler(mean, 0.99, 1e-14));
    mean += 0.37;
  }
}
BENCHMARK(BM_SolveKepler);

void BM_TrackerObserve(benchmark::State& state) {
  const PhaseState initial{kQ0, kP0, 0.0};
  diag::ErrorTracker tracker(initial, kParams, 1 << 10);
  PhaseState s = initial;
  for (auto _ : state) {
    s = baseline::leapfrog_step(s, kParams, 0.01);
    benchmark::DoNotOptimize(tracker.observe(s));
  }
}
BENCHMARK(BM_TrackerObserve);

}  // namespace

BENCHMARK_MAIN();

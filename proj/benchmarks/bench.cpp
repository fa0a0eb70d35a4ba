#include <benchmark/benchmark.h>

#include "mrbound/aim.hpp"
#include "mrbound/oracle.hpp"
#include "mrbound/wavefn.hpp"

using namespace mrbound;

namespace {

const PhysicalConstants kAtomic = PhysicalConstants::atomic();
const PotentialParams kParams{80.0, 0.75, 40.0};

void BM_ClosedFormEnergy(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        energy_manning_rosen({1, 2}, kParams, CentrifugalScheme::Approx1, kAtomic));
  }
}
BENCHMARK(BM_ClosedFormEnergy);

void BM_AimSolve(benchmark::State& state) {
  const ParametricPair pp = mr_to_aim(kParams, 1, CentrifugalScheme::Approx1, kAtomic);
  const double target =
      energy_manning_rosen({0, 1}, kParams, CentrifugalScheme::Approx1, kAtomic).value;
  AimConfig cfg;
  cfg.max_k = 5;
  cfg.x0 = pp.default_x0;
  cfg.tol = 1e-12;
  cfg.bracket_lo = 1.2 * target;
  cfg.bracket_hi = 0.8 * target;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_eigenvalues(pp, cfg));
  }
}
BENCHMARK(BM_AimSolve);

void BM_NumerovSweep(benchmark::State& state) {
  const OracleProblem prob = make_problem(kParams, 1, CentrifugalScheme::Exact, kAtomic);
  const RadialGrid grid = RadialGrid::defaults({0, 1}, kParams.b,
                                               static_cast<int>(state.range(0)));
  const double E =
      energy_manning_rosen({0, 1}, kParams, CentrifugalScheme::Approx1, kAtomic).value;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerov_sweep(prob, E, grid));
  }
}
BENCHMARK(BM_NumerovSweep)->Arg(2000)->Arg(8000);

void BM_WavefnNormalize(benchmark::State& state) {
  const RadialWavefunction wf =
      radial_wavefunction({2, 1}, kParams, CentrifugalScheme::Approx1, kAtomic);
  const double rmax = default_r_max({2, 1}, kParams.b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(wf, rmax));
  }
}
BENCHMARK(BM_WavefnNormalize);

}  // namespace

BENCHMARK_MAIN();

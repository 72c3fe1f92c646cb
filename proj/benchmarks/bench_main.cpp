#include "shc/heat_content.hpp"
#include "shc/laplace_inversion.hpp"
#include "shc/rng.hpp"
#include "shc/special_fn.hpp"
#include "shc/spectral.hpp"
#include "shc/stable_motion.hpp"
#include "shc/subordinator.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

namespace {

// Arguments are x * 10 so the three evaluation branches are all visited.
void BM_MittagLeffler(benchmark::State& state) {
  const double x = -static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(shc::mittag_leffler(0.5, x));
}
BENCHMARK(BM_MittagLeffler)->Arg(5)->Arg(50)->Arg(200)->Arg(5000);

void BM_StehfestInversion(benchmark::State& state) {
  const auto transform =
      shc::lt_inverse_time_transform(shc::LaplaceExponent::stable(0.5), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(shc::laplace_invert(transform, 1.0));
}
BENCHMARK(BM_StehfestInversion)->Unit(benchmark::kMicrosecond);

void BM_KanterSampler(benchmark::State& state) {
  shc::Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(shc::sample_stable_subordinator_unit(0.5, rng));
}
BENCHMARK(BM_KanterSampler);

void BM_SymmetricStableSampler(benchmark::State& state) {
  shc::Rng rng(2);
  const shc::StableSpec spec(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(shc::sample_symmetric_stable(spec, rng));
}
BENCHMARK(BM_SymmetricStableSampler);

void BM_TemperedIncrement(benchmark::State& state) {
  shc::Rng rng(3);
  const auto phi = shc::LaplaceExponent::tempered_stable(0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(shc::sample_increment(phi, 0.1, rng));
}
BENCHMARK(BM_TemperedIncrement);

void BM_ExitWalk(benchmark::State& state) {
  shc::Rng rng(4);
  const shc::StableSpec spec(1.5);
  const long steps = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        shc::simulate_exit(spec, {0.0, 1.0}, 0.5, 1.0 / steps, 1.0, rng));
  }
}
BENCHMARK(BM_ExitWalk)->Arg(100)->Arg(1000);

void BM_TimeChangedSeries(benchmark::State& state) {
  const auto eig = shc::bm_interval_eigensystem(shc::IntervalDomain(0.0, std::numbers::pi),
                                                static_cast<std::size_t>(state.range(0)));
  const auto phi = shc::LaplaceExponent::stable(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(shc::q_time_changed(eig, phi, 100.0));
}
BENCHMARK(BM_TimeChangedSeries)->Arg(10000)->Arg(40000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

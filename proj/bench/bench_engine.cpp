// Parallel engine paths against the serial direct sums they replace.
//
// TFU_THREADS or OMP_NUM_THREADS controls the parallel side.

#include <benchmark/benchmark.h>

#include "tfu/catalog.hpp"
#include "tfu/engine.hpp"

namespace {

tfu::Signal input(std::size_t M) {
  tfu::catalog::Generator gen(7);
  return gen.decaying_signal(tfu::uniform_grid(M, -8.0, 8.0));
}

void BM_WignerParallel(benchmark::State& state) {
  const tfu::Signal f = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tfu::cross_wigner(f, f));
}

void BM_WignerReference(benchmark::State& state) {
  const tfu::Signal f = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tfu::reference::cross_wigner(f, f));
}

void BM_SpectralRouteParallel(benchmark::State& state) {
  const tfu::Signal f = input(static_cast<std::size_t>(state.range(0)));
  const tfu::Kernel k = tfu::kernels::chirp(1.0);
  const tfu::EngineOptions skip{tfu::BandGuard::skip};
  for (auto _ : state) benchmark::DoNotOptimize(tfu::cctfd_freq(f, k, skip));
}

void BM_SpectralRouteReference(benchmark::State& state) {
  const tfu::Signal f = input(static_cast<std::size_t>(state.range(0)));
  const tfu::Kernel k = tfu::kernels::chirp(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(tfu::reference::cctfd_freq(f, k));
}

}  // namespace

BENCHMARK(BM_WignerParallel)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WignerReference)->RangeMultiplier(2)->Range(128, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectralRouteParallel)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectralRouteReference)->RangeMultiplier(2)->Range(128, 256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

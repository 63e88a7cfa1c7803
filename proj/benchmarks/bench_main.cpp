#include <benchmark/benchmark.h>

#include "tlim/catalog.hpp"
#include "tlim/linalg.hpp"
#include "tlim/study.hpp"
#include "tlim/toeplitz.hpp"

namespace {

const tlim::FourierSeries& series() {
  static const auto s = tlim::fourier_coefficients(tlim::catalog::exp_cosine(), 256);
  return s;
}

void BM_LuLogdet(benchmark::State& state) {
  const auto t = tlim::build_toeplitz(series(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tlim::lu_logdet(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LuLogdet)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_BuildPerturbed(benchmark::State& state) {
  const tlim::Perturbation pert({1, 0}, {0, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(tlim::build_perturbed(series(), pert, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildPerturbed)->Arg(64)->Arg(200);

void BM_FourierCoefficients(benchmark::State& state) {
  const auto spec = tlim::catalog::exp_cosine();
  for (auto _ : state) benchmark::DoNotOptimize(tlim::fourier_coefficients(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FourierCoefficients)->Arg(64)->Arg(512);

void BM_RunStudy(benchmark::State& state) {
  tlim::StudyConfig cfg;
  cfg.symbol = tlim::catalog::linear_factors();
  cfg.perturbation = tlim::Perturbation({1, 0}, {0, 1});
  cfg.n_schedule = {8, 16, 32, 64};
  for (auto _ : state) benchmark::DoNotOptimize(tlim::run_study(cfg, {state.range(0) != 0}));
}
BENCHMARK(BM_RunStudy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "latsum/bigfloat.hpp"
#include "latsum/lattice.hpp"
#include "latsum/power_series.hpp"
#include "latsum/richardson.hpp"
#include "latsum/vpt.hpp"

namespace {

void BM_series_pow(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  latsum::PowerSeries u{latsum::generate_instanton(order).site_row(1)};
  const latsum::Rational alpha(-order, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(latsum::series_pow(u, alpha, order));
  }
}
BENCHMARK(BM_series_pow)->Arg(20)->Arg(50)->Arg(100);

void BM_generate_instanton(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(latsum::generate_instanton(order));
  }
}
BENCHMARK(BM_generate_instanton)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_generate_blasius(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(latsum::generate_blasius(order));
  }
}
BENCHMARK(BM_generate_blasius)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_richardson(benchmark::State& state) {
  latsum::SequenceData seq;
  seq.n0 = 1;
  for (long n = 1; n <= 200; ++n) {
    seq.values.push_back(latsum::BigFloat::of(1.0) +
                         latsum::BigFloat::of(1L) / latsum::BigFloat::of(n));
  }
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(latsum::richardson(seq, k));
  }
}
BENCHMARK(BM_richardson)->Arg(1)->Arg(6);

void BM_vpt_optimal_k0(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  latsum::VptProblem problem{latsum::generate_instanton(N).site_row(1), -1, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        latsum::optimal_k0(problem, N, latsum::VptStrategy::RightmostInflection));
  }
}
BENCHMARK(BM_vpt_optimal_k0)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

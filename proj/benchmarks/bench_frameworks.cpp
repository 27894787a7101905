#include <benchmark/benchmark.h>

#include "sfft/bucketize.hpp"
#include "sfft/dsp.hpp"
#include "sfft/frameworks.hpp"
#include "sfft/harness.hpp"

namespace {

using sfft::Framework;
using sfft::Index;

sfft::GeneratedSignal make_signal(Index n, Index k) {
  sfft::SignalSpec s;
  s.n = n;
  s.k = k;
  s.seed = 1;
  s.snr_db = 20.0;
  return sfft::gen_signal(s);
}

void run_framework(benchmark::State& state, Framework fw) {
  Index n = state.range(0);
  const Index k = state.range(1);
  if (fw == Framework::peeling) n = sfft::coprime_length_near(n);
  const sfft::GeneratedSignal g = make_signal(n, k);
  const sfft::SparseFFT algo(n, k, sfft::default_config(fw, n, k));
  Index samples = 0;
  for (auto _ : state) {
    const sfft::RecoveryResult r = algo.run(g.signal.fresh_copy());
    samples = r.samples_read;
    benchmark::DoNotOptimize(r.spectrum.size());
  }
  state.counters["n"] = static_cast<double>(n);
  state.counters["sampling"] = static_cast<double>(samples) / static_cast<double>(n);
}

void BM_OneShot(benchmark::State& s) { run_framework(s, Framework::one_shot); }
void BM_Voting(benchmark::State& s) { run_framework(s, Framework::voting); }
void BM_Iterative(benchmark::State& s) { run_framework(s, Framework::iterative); }
void BM_Peeling(benchmark::State& s) { run_framework(s, Framework::peeling); }

void BM_Dense(benchmark::State& state) {
  const Index n = state.range(0);
  const sfft::GeneratedSignal g = make_signal(n, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sfft::run_dense(g.signal.fresh_copy(), state.range(1)).spectrum.size());
}

void BM_BucketizeFlat(benchmark::State& state) {
  const Index n = state.range(0);
  const Index b = state.range(1);
  const sfft::GeneratedSignal g = make_signal(n, 50);
  const sfft::WindowFilter w = sfft::make_flat_filter(n, b);
  const sfft::PermutationParams p{3, 7, 11};
  for (auto _ : state) benchmark::DoNotOptimize(sfft::bucketize_flat(g.signal, w, p).values.data());
}

void BM_BucketizeSpike(benchmark::State& state) {
  const Index n = state.range(0);
  const sfft::GeneratedSignal g = make_signal(n, 50);
  for (auto _ : state) benchmark::DoNotOptimize(sfft::bucketize_spike(g.signal, state.range(1), 1).values.data());
}

void n_grid(benchmark::internal::Benchmark* b) {
  for (int e = 14; e <= 18; e += 2) b->Args({Index{1} << e, 50});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_OneShot)->Apply(n_grid);
BENCHMARK(BM_Voting)->Apply(n_grid);
BENCHMARK(BM_Iterative)->Apply(n_grid);
BENCHMARK(BM_Peeling)->Apply(n_grid);
BENCHMARK(BM_Dense)->Apply(n_grid);
BENCHMARK(BM_BucketizeFlat)->Args({1 << 16, 256})->Args({1 << 18, 256})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BucketizeSpike)->Args({1 << 16, 512})->Args({1 << 18, 512})->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();

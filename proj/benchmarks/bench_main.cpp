#include <benchmark/benchmark.h>

#include "bintail/bounds.hpp"
#include "bintail/exact_dist.hpp"
#include "bintail/verify.hpp"

namespace {

using bintail::BinomialSpec;
using bintail::Rational;

void BM_TailAtMean(benchmark::State& state) {
  const long n = state.range(0);
  const BinomialSpec spec(n, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(bintail::prob_exceeds_mean(spec));
}
BENCHMARK(BM_TailAtMean)->RangeMultiplier(4)->Range(16, 1024);

void BM_PmfTable(benchmark::State& state) {
  const BinomialSpec spec(state.range(0), Rational(2, 7));
  for (auto _ : state) benchmark::DoNotOptimize(bintail::pmf_table(spec));
}
BENCHMARK(BM_PmfTable)->RangeMultiplier(4)->Range(16, 1024);

void BM_BoundG(benchmark::State& state) {
  const long n = state.range(0);
  const int bits = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bintail::bound_g(n, n / 3, bits));
}
BENCHMARK(BM_BoundG)->ArgsProduct({{10, 100, 1000}, {128, 512}});

void BM_VerifyLemma6(benchmark::State& state) {
  bintail::VerifyOptions options;
  options.n_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(bintail::verify_lemma6(options));
}
BENCHMARK(BM_VerifyLemma6)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

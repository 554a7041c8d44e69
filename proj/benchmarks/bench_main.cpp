#include <benchmark/benchmark.h>

#include <random>

#include "bgf/combinatorics.hpp"
#include "bgf/dunkl.hpp"
#include "bgf/ensembles.hpp"
#include "bgf/series.hpp"

namespace {

void BM_EnumerateNc(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bgf::enumerate_nc(k));
}
BENCHMARK(BM_EnumerateNc)->DenseRange(6, 12, 2);

bgf::AxialSeries dense_axial(int cap) {
  bgf::AxialSeries s(1, bgf::VarCount::limit(), cap);
  int counter = 1;
  for (const auto& nu : bgf::partitions_up_to(cap)) {
    for (int d = 0; d + nu.size() <= cap; ++d) s.set(d, nu, bgf::Rational(counter++ % 7 - 3, 1 + counter % 4));
  }
  return s;
}

void BM_ApplyQ(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const auto f = dense_axial(cap);
  const auto g = dense_axial(cap + 1);
  for (auto _ : state) benchmark::DoNotOptimize(bgf::apply_q(f, g, bgf::Rational(1, 2), cap));
}
BENCHMARK(BM_ApplyQ)->DenseRange(2, 6, 2);

void BM_FiniteMixedMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto F = bgf::hermite_log_bgf(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bgf::finite_mixed_moment(F, bgf::Partition{2, 2}, 1));
  }
}
BENCHMARK(BM_FiniteMixedMoment)->DenseRange(2, 8, 2);

void BM_SampleBetaHermite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bgf::sample_beta_hermite(n, 2.0, ++seed));
}
BENCHMARK(BM_SampleBetaHermite)->Arg(50)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

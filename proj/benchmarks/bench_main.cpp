#include <benchmark/benchmark.h>

#include "symcensus/invverify.hpp"
#include "symcensus/lieverify.hpp"
#include "symcensus/partitions.hpp"

namespace pt = symcensus::partitions;
namespace lv = symcensus::lieverify;
namespace iv = symcensus::invverify;
using symcensus::Partition;

static void BM_CountP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pt::count_p(n));
}
BENCHMARK(BM_CountP)->Arg(49)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_CountQGe2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pt::count_q_ge2(n));
}
BENCHMARK(BM_CountQGe2)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long k = 0;
    pt::for_each_partition(n, 1, false, [&](std::span<const int>) { ++k; });
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_Enumerate)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

// {2,2,...} against {3,3,...}: closure is all of so(n).
static void BM_Closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto b1 = lv::block_algebra(Partition(std::vector<int>(n / 2, 2)));
  const auto b2 = lv::block_algebra(Partition(std::vector<int>(n / 3, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(lv::closure(b1, b2).dimension);
}
BENCHMARK(BM_Closure)->Arg(6)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_FixedSpace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Partition p({2, 2, 2, 2});
  const std::vector<iv::SignedInvolution> gens{{{1, 2, 2}, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(iv::fixed_space(p, gens, d).dim);
}
BENCHMARK(BM_FixedSpace)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyPair(benchmark::State& state) {
  const Partition a({8, 8}), b({4, 4, 4, 4});
  for (auto _ : state) benchmark::DoNotOptimize(iv::verify_pair(a, b, 4).passed);
}
BENCHMARK(BM_VerifyPair)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "elep/families.hpp"
#include "elep/numth.hpp"
#include "elep/search.hpp"
#include "elep/tree.hpp"

using namespace elep;

static void BM_Scan(benchmark::State& state) {
  for (auto _ : state) {
    auto report = search::scan(state.range(0));
    benchmark::DoNotOptimize(report.found.size());
  }
}
BENCHMARK(BM_Scan)->Arg(10)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ScanParallel(benchmark::State& state) {
  for (auto _ : state) {
    auto report = search::scan(40, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(report.found.size());
  }
}
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_TreeEnumerate(benchmark::State& state) {
  for (auto _ : state) {
    auto root = tree::enumerate(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(root.children.size());
  }
}
BENCHMARK(BM_TreeEnumerate)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Representations(benchmark::State& state) {
  const Nat n = 3 * Nat(state.range(0)) * Nat(state.range(0));
  for (auto _ : state) {
    auto reps = search::representations(n);
    benchmark::DoNotOptimize(reps.size());
  }
}
BENCHMARK(BM_Representations)->Arg(28)->Arg(268)->Arg(2644);

static void BM_Realize(benchmark::State& state) {
  for (auto _ : state) {
    auto r = search::realize(2, state.range(0));
    benchmark::DoNotOptimize(r.v1.x.get_si());
  }
}
BENCHMARK(BM_Realize)->Arg(28)->Arg(268)->Arg(2644)->Unit(benchmark::kMillisecond);

static void BM_BrutePell(benchmark::State& state) {
  for (auto _ : state) {
    auto sols = families::brute_pell(families::PellKind::vs4, state.range(0));
    benchmark::DoNotOptimize(sols.size());
  }
}
BENCHMARK(BM_BrutePell)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Isqrt(benchmark::State& state) {
  const Nat big = Nat("123456789123456789123456789123456789");
  for (auto _ : state) {
    benchmark::DoNotOptimize(numth::isqrt(big).get_si());
  }
}
BENCHMARK(BM_Isqrt);

BENCHMARK_MAIN();

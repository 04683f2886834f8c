#include <benchmark/benchmark.h>

#include "pda/analysis.hpp"
#include "pda/cache_sim.hpp"
#include "pda/constructions.hpp"
#include "pda/pda.hpp"

namespace {

void BM_MaddahAliNiesen(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pda::maddah_ali_niesen(k, k / 2));
  }
}
BENCHMARK(BM_MaddahAliNiesen)->Arg(8)->Arg(12)->Arg(16);

void BM_ConstructionA(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pda::construction_a(4, m));
  }
}
BENCHMARK(BM_ConstructionA)->Arg(2)->Arg(3)->Arg(4);

void BM_ConstructionB(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pda::construction_b(4, m));
  }
}
BENCHMARK(BM_ConstructionB)->Arg(2)->Arg(3)->Arg(4);

void BM_Validate(benchmark::State& state) {
  const pda::Pda p = pda::maddah_ali_niesen(static_cast<int>(state.range(0)),
                                            static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pda::validate(p));
  }
}
BENCHMARK(BM_Validate)->Arg(8)->Arg(10)->Arg(12);

void BM_Deliver(benchmark::State& state) {
  const pda::CachingInstance inst = pda::place(pda::construction_a(2, 2), 6);
  const std::vector<int> demand{0, 1, 2, 3, 4, 5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pda::deliver(inst, demand));
  }
}
BENCHMARK(BM_Deliver);

void BM_VerifyExhaustive(benchmark::State& state) {
  const pda::CachingInstance inst =
      pda::place(pda::maddah_ali_niesen(4, 2), 4, pda::PayloadSpec{7, 16});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pda::verify_demands(inst, pda::VerifyMode::exhaustive()));
  }
}
BENCHMARK(BM_VerifyExhaustive);

void BM_BruteForceSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pda::brute_force_min_f(4, 3, 2, 8));
  }
}
BENCHMARK(BM_BruteForceSearch);

}  // namespace

BENCHMARK_MAIN();

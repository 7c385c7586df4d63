#include <benchmark/benchmark.h>

#include "sqtriplets/exact.hpp"
#include "sqtriplets/freecomplex.hpp"
#include "sqtriplets/functors.hpp"
#include "sqtriplets/sqmodule.hpp"
#include "sqtriplets/tensorranks.hpp"
#include "sqtriplets/triplets.hpp"

namespace {

using namespace sqt;

FreeSqComplex example23() {
  FreeSqComplex f(3);
  f.set_term(0, {Generator{0}});
  f.set_term(-1, {Generator{0b011}, Generator{0b101}, Generator{0b110}});
  RatMatrix d(1, 3);
  d(0, 0) = 1;
  d(0, 1) = 1;
  d(0, 2) = 1;
  f.set_diff(-1, d);
  f.prune();
  return f;
}

void BM_TransitionCube(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const RatMatrix a = transition_matrix(n);
    benchmark::DoNotOptimize(a * a * a);
  }
}
BENCHMARK(BM_TransitionCube)->Arg(6)->Arg(12);

void BM_Nullspace(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  RatMatrix m(k, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      m(i, j) = rat(static_cast<long>((i * 7 + j * 3) % 11) - 5,
                    static_cast<long>(j + 1));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(8)->Arg(16);

void BM_ResolveKoszul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SqModule k = standard_module(n, (1u << n) - 1u, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(resolve_module(k));
}
BENCHMARK(BM_ResolveKoszul)->Arg(3)->Arg(5);

void BM_AdExample(benchmark::State& state) {
  const FreeSqComplex f = example23();
  for (auto _ : state) benchmark::DoNotOptimize(ad(f));
}
BENCHMARK(BM_AdExample);

void BM_SolveBetti(benchmark::State& state) {
  DegreeTriplet t;
  t.n = 9;
  t.a = {1, 3, 4, 7};
  for (int d = 3; d <= 8; ++d) t.b.insert(d);
  for (int d = 2; d <= 6; ++d) t.c.insert(d);
  for (auto _ : state) benchmark::DoNotOptimize(solve_betti(t));
}
BENCHMARK(BM_SolveBetti);

void BM_EnumerateBalanced(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_balanced(n));
}
BENCHMARK(BM_EnumerateBalanced)->Arg(4)->Arg(5);

void BM_TermRanks(benchmark::State& state) {
  const std::set<int> a{1, 3, 4, 7, 9, 10};
  for (auto _ : state) benchmark::DoNotOptimize(construction_betti(a, 12));
}
BENCHMARK(BM_TermRanks);

}  // namespace

BENCHMARK_MAIN();

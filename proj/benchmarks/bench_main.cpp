#include <benchmark/benchmark.h>

#include "sqstable/sqstable.hpp"

using namespace sqstable;

namespace {

Graph cycle(int n) {
  FamilySpec spec;
  spec.family = Family::kCycle;
  spec.n = n;
  return make_family(spec);
}

Graph random_connected(int n, int m, std::uint64_t seed) {
  FamilySpec spec;
  spec.family = Family::kRandomConnected;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  return make_family(spec);
}

void BM_StabilityNumberCycle(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stability_number(g).alpha);
}
BENCHMARK(BM_StabilityNumberCycle)->Arg(12)->Arg(32)->Arg(64);

void BM_StabilityNumberRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_connected(n, 2 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(stability_number(g).alpha);
}
BENCHMARK(BM_StabilityNumberRandom)->Arg(16)->Arg(32)->Arg(48);

void BM_InvariantChainC12(benchmark::State& state) {
  const Graph g = cycle(12);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_chain(g));
}
BENCHMARK(BM_InvariantChainC12);

void BM_MaximumMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_connected(n, 3 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g).size());
}
BENCHMARK(BM_MaximumMatching)->Arg(16)->Arg(64);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 14, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).code);
}
BENCHMARK(BM_CanonicalForm)->Arg(9)->Arg(11);

void BM_VerifyEquivalences(benchmark::State& state) {
  const Graph g = corona_k1(random_connected(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 2, 4));
  for (auto _ : state) benchmark::DoNotOptimize(verify_equivalences(g).agree);
}
BENCHMARK(BM_VerifyEquivalences)->Arg(4)->Arg(7);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_corpus(static_cast<int>(state.range(0)), true).size());
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

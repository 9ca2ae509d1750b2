#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "spanfact/pipeline.hpp"

using namespace spanfact;

namespace {

void BM_Compose(benchmark::State &state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<Point> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = b[i] = static_cast<Point>(i);
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  Permutation p(std::move(a)), q(std::move(b));
  for (auto _ : state)
    benchmark::DoNotOptimize(compose(p, q));
}
BENCHMARK(BM_Compose)->Arg(30)->Arg(1024);

void BM_EnumerateEx2(benchmark::State &state) {
  auto inst = build_instance(fixture_config("a5-ex2"));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_factorizations(inst.graph()));
}
BENCHMARK(BM_EnumerateEx2)->Unit(benchmark::kMillisecond);

void BM_ClassifyEx2(benchmark::State &state) {
  auto s = open_session(fixture_config("a5-ex2"));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        classify_factorizations(s.instance.graph(), s.family, s.instance.automorphisms, true));
}
BENCHMARK(BM_ClassifyEx2)->Unit(benchmark::kMillisecond);

void BM_TreeSearchToy(benchmark::State &state) {
  auto f = build_toy(static_cast<std::size_t>(state.range(0))).canonical;
  for (auto _ : state)
    benchmark::DoNotOptimize(max_relocatable_tree(f));
}
BENCHMARK(BM_TreeSearchToy)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_TreeSearchEx2(benchmark::State &state) {
  auto s = open_session(fixture_config("a5-ex2"));
  const auto &f = s.family.members[0];
  for (auto _ : state)
    benchmark::DoNotOptimize(max_relocatable_tree(f));
}
BENCHMARK(BM_TreeSearchEx2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();

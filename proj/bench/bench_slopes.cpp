// Serial reference loops against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "linkslope/catalog.hpp"
#include "linkslope/characters.hpp"
#include "linkslope/fox.hpp"
#include "linkslope/parallel.hpp"

using namespace linkslope;

namespace {

struct Workload {
  Presentation presentation;
  std::vector<Character> characters;
};

const Workload& workload(int max_order) {
  static std::map<int, Workload> cache;
  auto it = cache.find(max_order);
  if (it == cache.end()) {
    const Catalog catalog = Catalog::load_default();
    Presentation p = catalog.find("L11n353").presentation();
    std::vector<Character> chars = enumerate_unitary_admissible(p.linking_vector(), max_order);
    it = cache.emplace(max_order, Workload{std::move(p), std::move(chars)}).first;
  }
  return it->second;
}

void BM_SlopesSerial(benchmark::State& state) {
  const Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_slopes_serial(w.presentation, w.characters));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(w.characters.size()));
}

void BM_SlopesParallel(benchmark::State& state) {
  const Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_slopes(w.presentation, w.characters));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(w.characters.size()));
}

void BM_AlexanderSerial(benchmark::State& state) {
  const Presentation& p = workload(6).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(alexander_order(p, static_cast<int>(state.range(0))));
}

void BM_AlexanderParallel(benchmark::State& state) {
  const Presentation& p = workload(6).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(alexander_order_parallel(p, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_SlopesSerial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SlopesParallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlexanderSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlexanderParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gametopo/atlas.h"
#include "gametopo/export.h"
#include "gametopo/families.h"
#include "gametopo/normalization.h"
#include "gametopo/ties.h"

namespace gametopo {
namespace {

void BM_BuildAtlas(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BuildAtlas());
}
BENCHMARK(BM_BuildAtlas)->Unit(benchmark::kMillisecond);

void BM_BuildTieLattice(benchmark::State& state) {
  const TopologyAtlas& atlas = DefaultAtlas();
  for (auto _ : state) benchmark::DoNotOptimize(BuildTieLattice(atlas));
}
BENCHMARK(BM_BuildTieLattice)->Unit(benchmark::kMillisecond);

void BM_FamilyCensus(benchmark::State& state) {
  const TopologyAtlas& atlas = DefaultAtlas();
  for (auto _ : state) benchmark::DoNotOptimize(ComputeFamilyCensus(atlas));
}
BENCHMARK(BM_FamilyCensus);

void BM_ShortestPathAllPairs(benchmark::State& state) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const SwapKindSet all = SwapKindSet::All();
  for (auto _ : state) {
    std::size_t total = 0;
    for (int i = 0; i < 144; i += 13) {
      for (int j = 0; j < 144; ++j) {
        total += atlas
                     .ShortestPath(StrictGameId::FromIndex(i),
                                   StrictGameId::FromIndex(j), all)
                     .size();
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ShortestPathAllPairs)->Unit(benchmark::kMillisecond);

void BM_HalfSwapPathNullToUtterHarmony(benchmark::State& state) {
  const TieLattice& lattice = DefaultTieLattice();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lattice.HalfSwapPath(named_games::Null(), named_games::UtterHarmony()));
  }
}
BENCHMARK(BM_HalfSwapPathNullToUtterHarmony);

void BM_SampleCensus(benchmark::State& state) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SampleCensusOf(atlas, 144000, 42, SampleDistribution::kUniform, workers));
  }
  state.SetItemsProcessed(state.iterations() * 144000);
}
BENCHMARK(BM_SampleCensus)
    ->Arg(1)
    ->Arg(4)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_ExportUiData(benchmark::State& state) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const TieLattice& lattice = DefaultTieLattice();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ExportAtlasJson(atlas, lattice, JsonVariant::kUiDataWithTies));
  }
}
BENCHMARK(BM_ExportUiData)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gametopo

BENCHMARK_MAIN();

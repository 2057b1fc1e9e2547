// Serial reference against the OpenMP kernel on the blocks of a bar differential.

#include <benchmark/benchmark.h>

#include "gwa/chains.hpp"

using namespace gwa;

namespace {

std::vector<std::vector<IntRow>> differential_blocks(int bound, int n) {
  BaseRing R({{"u", false, {}}, {"v", false, {}}}, {}, ScalarMode::Q);
  ChainOptions opts;
  opts.bound = bound;
  opts.top = n;
  const ChainComplex C(R, opts);
  std::vector<std::vector<IntRow>> blocks;
  for (const auto& [key, idx] : C.blocks(n)) {
    std::vector<IntRow> rows;
    for (std::size_t j : idx) rows.push_back(to_primitive(C.differential(n, j)));
    blocks.push_back(std::move(rows));
  }
  return blocks;
}

const std::vector<std::vector<IntRow>>& blocks_for(int bound) {
  static std::map<int, std::vector<std::vector<IntRow>>> cache;
  auto it = cache.find(bound);
  if (it == cache.end()) it = cache.emplace(bound, differential_blocks(bound, 3)).first;
  return it->second;
}

void BM_BlockRanksSerial(benchmark::State& state) {
  const auto& blocks = blocks_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(block_ranks_serial(blocks));
  state.counters["blocks"] = static_cast<double>(blocks.size());
}

void BM_BlockRanksParallel(benchmark::State& state) {
  const auto& blocks = blocks_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(block_ranks_parallel(blocks));
  state.counters["blocks"] = static_cast<double>(blocks.size());
}

}  // namespace

BENCHMARK(BM_BlockRanksSerial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockRanksParallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "hookbound/characters.hpp"
#include "hookbound/dimensions.hpp"
#include "hookbound/excited.hpp"

namespace {

using namespace hookbound;

// Staircase-like shape of size roughly n.
Partition staircase(int rows) {
  std::vector<int> parts;
  for (int r = rows; r >= 1; --r) parts.push_back(r);
  return Partition(std::move(parts));
}

// Staircases are 2-cores, so the shape is widened before peeling 2-cycles.
void BM_CharacterMn(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const Partition lambda{r + 3, r + 1, r, 2};
  std::vector<int> lengths(static_cast<std::size_t>(lambda.size() / 2), 2);
  if (lambda.size() % 2) lengths.push_back(1);
  const CycleType type(std::move(lengths));
  for (auto _ : state) benchmark::DoNotOptimize(character_mn(lambda, type));
  state.SetLabel("n=" + std::to_string(lambda.size()));
}
BENCHMARK(BM_CharacterMn)->DenseRange(2, 10, 2);

void BM_EnumerateExcited(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Partition lambda(std::vector<int>(static_cast<std::size_t>(2 * m), 2 * m));
  const Partition mu = staircase(m);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_excited(lambda, mu));
  state.SetLabel("|E| over " + lambda.to_string());
}
BENCHMARK(BM_EnumerateExcited)->DenseRange(2, 4);

void BM_SkewDimDet(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const Partition lambda = staircase(rows + 2);
  const Partition mu = staircase(rows);
  const SkewShape s(lambda, mu);
  for (auto _ : state) benchmark::DoNotOptimize(skew_dim_det(s));
}
BENCHMARK(BM_SkewDimDet)->DenseRange(2, 8, 2);

void BM_SkewDimOracle(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const SkewShape s(staircase(rows + 2), staircase(rows));
  for (auto _ : state) benchmark::DoNotOptimize(skew_dim_oracle(s, 64));
}
BENCHMARK(BM_SkewDimOracle)->DenseRange(2, 4, 1);

}  // namespace
BENCHMARK_MAIN();

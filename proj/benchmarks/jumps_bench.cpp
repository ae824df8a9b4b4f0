#include <benchmark/benchmark.h>

#include <random>

#include "kmon/checker.hpp"
#include "kmon/words.hpp"

namespace {

kmon::Word random_word(std::size_t length, int letters, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, letters - 1);
  kmon::Word w(length, U'\0');
  for (auto& a : w) a = static_cast<kmon::Letter>(U'a' + pick(rng));
  return w;
}

void BM_Jumps(benchmark::State& state) {
  const kmon::Word w = random_word(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kmon::jumps(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Jumps)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 20, 8), {26}})
    ->Complexity(benchmark::oNLogN)
    ->Unit(benchmark::kMillisecond);

void BM_JumpsByAlphabet(benchmark::State& state) {
  const kmon::Word w = random_word(100'000, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kmon::jumps(w));
}
BENCHMARK(BM_JumpsByAlphabet)->DenseRange(2, 26, 8)->Arg(52)->Unit(benchmark::kMillisecond);

void BM_OccurrenceWords(benchmark::State& state) {
  const kmon::Word w = random_word(static_cast<std::size_t>(state.range(0)), 26, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmon::fow(w));
    benchmark::DoNotOptimize(kmon::low(w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OccurrenceWords)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_CheckK3(benchmark::State& state) {
  const kmon::Word u = random_word(static_cast<std::size_t>(state.range(0)), 4, 4);
  const kmon::Identity id{u, u};
  for (auto _ : state) benchmark::DoNotOptimize(kmon::check_k3(id));
}
BENCHMARK(BM_CheckK3)->Range(16, 1 << 16);

void BM_CheckK3Subsets(benchmark::State& state) {
  const kmon::Word u = random_word(64, static_cast<int>(state.range(0)), 5);
  const kmon::Identity id{u, u};
  for (auto _ : state) benchmark::DoNotOptimize(kmon::check_k3_subsets(id));
}
BENCHMARK(BM_CheckK3Subsets)->DenseRange(2, 10, 2);

}  // namespace

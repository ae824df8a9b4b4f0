#include <benchmark/benchmark.h>

#include <random>

#include "kmon/diagram.hpp"

namespace {

kmon::GeneratorWord random_generators(std::size_t n, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  kmon::GeneratorWord w(length);
  for (auto& g : w) g = kmon::Generator{pick(rng)};
  return w;
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const kmon::TLDiagram a = kmon::eval_word(n, random_generators(n, 4 * n, 1));
  const kmon::TLDiagram b = kmon::eval_word(n, random_generators(n, 4 * n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(kmon::multiply(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(3, 3072)->Complexity(benchmark::oN);

void BM_EvalWord(benchmark::State& state) {
  const kmon::GeneratorWord w = random_generators(5, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kmon::eval_word(5, w));
}
BENCHMARK(BM_EvalWord)->Range(8, 4096);

void BM_JonesNF(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const kmon::TLDiagram d = kmon::eval_word(n, random_generators(n, 8 * n, 4));
  benchmark::DoNotOptimize(kmon::jones_nf(d));
  for (auto _ : state) benchmark::DoNotOptimize(kmon::jones_nf(d));
}
BENCHMARK(BM_JonesNF)->DenseRange(3, 10);

}  // namespace

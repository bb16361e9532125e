#include <benchmark/benchmark.h>

#include <random>

#include "bnfix/network.hpp"
#include "bnfix/oracle.hpp"
#include "bnfix/synth.hpp"
#include "bnfix/words.hpp"

using namespace bnfix;

namespace {

BooleanNetwork random_network(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution bit(0.5);
  return BooleanNetwork::from_components(
      n, [&](int, std::uint32_t) { return bit(rng); });
}

Digraph loopfull_path(int n) {
  Digraph g(n);
  for (int v = 1; v <= n; ++v) g.add_arc(v, v);
  for (int v = 1; v < n; ++v) {
    g.add_arc(v, v + 1);
    g.add_arc(v + 1, v);
  }
  return g;
}

void BM_ApplyWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BooleanNetwork f = random_network(n, 1);
  const Word w = gray_word(n);
  std::uint32_t x = 0;
  for (auto _ : state) {
    x = apply_word(f, w, x);
    benchmark::DoNotOptimize(x);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_ApplyWord)->Arg(8)->Arg(12)->Arg(16);

void BM_IsAsyncAcyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BooleanNetwork f = random_network(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_async_acyclic(f));
}
BENCHMARK(BM_IsAsyncAcyclic)->Arg(8)->Arg(14);

void BM_MinFixingLength(benchmark::State& state) {
  const BooleanNetwork f =
      BooleanNetwork::from_components(3, [](int i, std::uint32_t x) {
        const bool x1 = (x >> 2) & 1u, x2 = (x >> 1) & 1u, x3 = x & 1u;
        if (i == 1) return x1 && x2 && x3;
        if (i == 2) return x1 && !x3;
        return x2 && !x1;
      });
  for (auto _ : state) benchmark::DoNotOptimize(min_fixing_length(f));
}
BENCHMARK(BM_MinFixingLength);

void BM_GrayWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gray_word(n));
}
BENCHMARK(BM_GrayWord)->Arg(12)->Arg(20);

void BM_IsKUniversal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Word w = zigzag_universal(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(is_k_universal(w, n, 0));
}
BENCHMARK(BM_IsKUniversal)->Arg(6)->Arg(8);

void BM_IsPathUniversal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Word w = path_universal_word(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_path_universal(w, n));
}
BENCHMARK(BM_IsPathUniversal)->Arg(3)->Arg(4);

void BM_TreeWord(benchmark::State& state) {
  const Digraph g = loopfull_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_word(g));
}
BENCHMARK(BM_TreeWord)->Arg(12);

void BM_FeedbackWord(benchmark::State& state) {
  Digraph g(6);
  for (int v = 1; v <= 6; ++v) g.add_arc(v, v);
  for (int v = 1; v <= 6; ++v) g.add_arc(v, v % 6 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(feedback_word(g));
}
BENCHMARK(BM_FeedbackWord);

void BM_FixableFraction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fixable_fraction(2));
}
BENCHMARK(BM_FixableFraction);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "permwold/oracle.hpp"
#include "permwold/search.hpp"
#include "permwold/slocinski.hpp"

using namespace permwold;

namespace {

// Cyclic theta on {1,2} x {1,2}: (i,j) -> next cell in row-major order.
Theta cyclic() { return Theta(2, 2, {{1, 2}, {2, 1}, {2, 2}, {1, 1}}); }

CommutingPair free_pair() { return CommutingPair(PairPresentation(cyclic(), {"b"}, {}, {})); }

// Alternating S and T letters: every adjacent pair needs a rewrite.
Word alternating(std::size_t length) {
  Word w;
  for (std::size_t k = 0; k < length; ++k)
    w.letters.push_back({k % 2 == 0 ? Family::S : Family::T, static_cast<Label>(1 + k % 3 % 2)});
  return w;
}

void BM_Normalize(benchmark::State& state) {
  const Theta theta = cyclic();
  const Word w = alternating(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(theta, w));
}
BENCHMARK(BM_Normalize)->Arg(8)->Arg(32)->Arg(128);

void BM_EnumerateFree(benchmark::State& state) {
  const auto p = free_presentation(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateFree)->Arg(4)->Arg(6)->Arg(8);

void BM_EnumeratePair(benchmark::State& state) {
  const auto cp = free_pair();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(cp, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumeratePair)->Arg(3)->Arg(5);

void BM_Materialize(benchmark::State& state) {
  const auto cp = free_pair();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(materialize(cp, depth));
}
BENCHMARK(BM_Materialize)->Arg(3)->Arg(5);

void BM_VerifyRelations(benchmark::State& state) {
  const auto model = materialize(free_pair(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(model));
}
BENCHMARK(BM_VerifyRelations)->Arg(3)->Arg(5);

void BM_Slocinski(benchmark::State& state) {
  const auto cp = free_pair();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slocinski(cp, Order::kST, depth));
}
BENCHMARK(BM_Slocinski)->Arg(4)->Arg(6);

void BM_Search(benchmark::State& state) {
  const SearchSpace space{static_cast<std::size_t>(state.range(0)), 2, 2, true};
  for (auto _ : state) benchmark::DoNotOptimize(search(space, Property::kDoublyCommuting));
}
BENCHMARK(BM_Search)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

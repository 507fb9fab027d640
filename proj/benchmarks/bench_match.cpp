#include <benchmark/benchmark.h>

#include "axlarena/match.hpp"
#include "axlarena/strategy.hpp"

namespace {

const axl::Strategy& builtin(const char* name) {
  return *axl::find_builtin(name);
}

void BM_MatchTitForTat(benchmark::State& state) {
  axl::MatchSpec spec;
  spec.turns = static_cast<std::size_t>(state.range(0));
  spec.seed = 1;
  const auto& tft = builtin("Tit For Tat");
  for (auto _ : state) {
    benchmark::DoNotOptimize(axl::play_match(spec, tft, tft));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchTitForTat)->Arg(200)->Arg(1000);

void BM_MatchStochastic(benchmark::State& state) {
  axl::MatchSpec spec;
  spec.turns = static_cast<std::size_t>(state.range(0));
  spec.seed = 1;
  const auto& a = builtin("ZD-Extort-2");
  const auto& b = builtin("Joss 0.9");
  for (auto _ : state) {
    benchmark::DoNotOptimize(axl::play_match(spec, a, b));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchStochastic)->Arg(200)->Arg(1000);

void BM_MatchNoisy(benchmark::State& state) {
  axl::MatchSpec spec;
  spec.turns = 200;
  spec.noise = 0.05;
  spec.seed = 1;
  const auto& a = builtin("Tit For Tat");
  const auto& b = builtin("Grudger");
  for (auto _ : state) {
    benchmark::DoNotOptimize(axl::play_match(spec, a, b));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_MatchNoisy);

void BM_MatchUnboundedMemory(benchmark::State& state) {
  // Calculator rescans the opponent's opening for cycles every round.
  axl::MatchSpec spec;
  spec.turns = static_cast<std::size_t>(state.range(0));
  spec.seed = 1;
  const auto& a = builtin("Calculator");
  const auto& b = builtin("Hard Go By Majority");
  for (auto _ : state) {
    benchmark::DoNotOptimize(axl::play_match(spec, a, b));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchUnboundedMemory)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "axlarena/results.hpp"
#include "axlarena/strategy.hpp"
#include "axlarena/tournament.hpp"

namespace {

axl::TournamentSpec spec_for(const axl::Roster& players, std::size_t turns,
                             std::size_t reps) {
  axl::TournamentSpec spec;
  spec.players = players;
  spec.turns = turns;
  spec.repetitions = reps;
  spec.master_seed = 7;
  return spec;
}

void BM_TournamentDemo(benchmark::State& state) {
  const auto spec = spec_for(axl::demo_roster(), 200, 10);
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(axl::run_tournament(spec, jobs));
  }
}
BENCHMARK(BM_TournamentDemo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TournamentFullRoster(benchmark::State& state) {
  const auto spec = spec_for(axl::stewart_roster(), 200, 2);
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(axl::run_tournament(spec, jobs));
  }
}
BENCHMARK(BM_TournamentFullRoster)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ResultAggregation(benchmark::State& state) {
  const auto spec = spec_for(axl::stewart_roster(), 200, 10);
  const auto archive = axl::run_tournament(spec, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(axl::build_result_set(archive, spec));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(archive.entries.size()));
}
BENCHMARK(BM_ResultAggregation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

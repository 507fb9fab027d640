#pragma once

#include <cstdint>
#include <vector>

#include "axlarena/game.hpp"
#include "axlarena/lookup.hpp"
#include "axlarena/strategy.hpp"

namespace axl {

// Desk-scale evolutionary search over lookup tables. The genome is the
// table's 2^m * 4^n entries plus its max(m, n) initial actions.
struct TrainerConfig {
  std::size_t first_m = 0;
  std::size_t pairs_n = 1;
  std::size_t population_size = 16;
  std::size_t generations = 50;
  double mutation_rate = 0.1;  // per-entry flip probability, in (0, 1)
  Roster opponent_pool;
  std::size_t turns = 100;
  std::uint64_t seed = 0;
  Game game{};
};

// Mean per-turn score of the table's strategy over one match against each
// pool member, match k seeded with derive_seed(seed, {k}). Deterministic
// given `seed`.
double evaluate_table(const LookupTable& table, const Roster& pool, std::size_t turns,
                      std::uint64_t seed, const Game& game = {});

struct TrainingResult {
  LookupTable best;
  std::vector<double> score_history;  // best fitness per generation, history[0] = initial
};

// (mu + lambda) search: every parent spawns one mutant, parents and
// offspring compete, the best population_size survive. Evaluation seeds are
// fixed for the whole run so a genome's fitness never changes and elitism
// makes the history non-decreasing. Fully deterministic given config.seed.
TrainingResult evolve_lookup_table(const TrainerConfig& config);

}  // namespace axl

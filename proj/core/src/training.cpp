#include "axlarena/training.hpp"

#include <algorithm>
#include <utility>

#include "axlarena/errors.hpp"
#include "axlarena/match.hpp"
#include "axlarena/rng.hpp"

namespace axl {

namespace {

// Stream purposes under config.seed; frozen so runs are replayable.
constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kEvalStream = 1;
constexpr std::uint64_t kMutationStream = 2;

struct Individual {
  LookupTable genome;
  double fitness = 0.0;
};

LookupTable random_genome(std::size_t m, std::size_t n, RngStream& rng) {
  std::vector<Action> entries(LookupTable::num_keys(m, n));
  for (Action& a : entries) a = (rng.next_u64() & 1u) ? Action::D : Action::C;
  std::vector<Action> initial(std::max(m, n));
  for (Action& a : initial) a = (rng.next_u64() & 1u) ? Action::D : Action::C;
  return LookupTable::make(m, n, std::move(entries), std::move(initial));
}

LookupTable mutate(const LookupTable& parent, double rate, RngStream& rng) {
  LookupTable child = parent;
  for (Action& a : child.entries) {
    if (rng.bernoulli(rate)) a = flip(a);
  }
  for (Action& a : child.initial_actions) {
    if (rng.bernoulli(rate)) a = flip(a);
  }
  return child;
}

}  // namespace

double evaluate_table(const LookupTable& table, const Roster& pool, std::size_t turns,
                      std::uint64_t seed, const Game& game) {
  if (pool.empty()) throw InvalidValue("opponent_pool", "needs at least one opponent");
  const StrategyPtr candidate = make_looker_up(table);

  double total = 0.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    MatchSpec spec;
    spec.turns = turns;
    spec.game = game;
    spec.seed = derive_seed(seed, {k});
    const MatchRecord rec = play_match(spec, *candidate, *pool[k]);
    total += rec.score_a / static_cast<double>(rec.length());
  }
  return total / static_cast<double>(pool.size());
}

TrainingResult evolve_lookup_table(const TrainerConfig& config) {
  if (config.population_size == 0) {
    throw InvalidValue("population_size", "must be at least 1");
  }
  if (!(config.mutation_rate > 0.0 && config.mutation_rate < 1.0)) {
    throw InvalidValue("mutation_rate", "must lie strictly between 0 and 1");
  }
  if (config.opponent_pool.empty()) {
    throw InvalidValue("opponent_pool", "needs at least one opponent");
  }

  RngStream init_rng(derive_seed(config.seed, {kInitStream}));
  const std::uint64_t eval_seed = derive_seed(config.seed, {kEvalStream});
  RngStream mutation_rng(derive_seed(config.seed, {kMutationStream}));

  // Evaluation seeds stay fixed across generations, so fitness is a pure
  // function of the genome and elitism keeps the history non-decreasing.
  auto evaluate = [&](const LookupTable& genome) {
    return evaluate_table(genome, config.opponent_pool, config.turns, eval_seed,
                          config.game);
  };

  std::vector<Individual> population;
  population.reserve(2 * config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    Individual ind;
    ind.genome = random_genome(config.first_m, config.pairs_n, init_rng);
    ind.fitness = evaluate(ind.genome);
    population.push_back(std::move(ind));
  }

  auto by_fitness_desc = [](const Individual& a, const Individual& b) {
    return a.fitness > b.fitness;
  };
  std::stable_sort(population.begin(), population.end(), by_fitness_desc);

  TrainingResult result;
  result.score_history.reserve(config.generations + 1);
  result.score_history.push_back(population.front().fitness);

  for (std::size_t gen = 0; gen < config.generations; ++gen) {
    const std::size_t parents = population.size();
    for (std::size_t i = 0; i < parents; ++i) {
      Individual child;
      child.genome = mutate(population[i].genome, config.mutation_rate, mutation_rng);
      child.fitness = evaluate(child.genome);
      population.push_back(std::move(child));
    }
    std::stable_sort(population.begin(), population.end(), by_fitness_desc);
    population.resize(config.population_size);
    result.score_history.push_back(population.front().fitness);
  }

  result.best = std::move(population.front().genome);
  return result;
}

}  // namespace axl

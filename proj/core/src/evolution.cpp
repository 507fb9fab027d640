#include "axlarena/evolution.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "axlarena/errors.hpp"
#include "axlarena/match.hpp"
#include "axlarena/rng.hpp"

namespace axl {

namespace {

// Domain-separation tag for the birth/death stream, keeping it disjoint
// from the per-generation match seeds (seed, gen, i, j).
constexpr std::uint64_t kSelectionStreamTag = 0x5E1Ec7ull;

std::vector<std::size_t> census(const Roster& population,
                                const std::unordered_map<std::string, std::size_t>& slots) {
  std::vector<std::size_t> counts(slots.size(), 0);
  for (const auto& p : population) ++counts[slots.at(p->name())];
  return counts;
}

bool monomorphic(const Roster& population) {
  for (const auto& p : population) {
    if (p->name() != population.front()->name()) return false;
  }
  return true;
}

}  // namespace

MoranResult run_moran(const MoranState& initial) {
  if (initial.population.empty()) {
    throw InvalidValue("population", "needs at least one individual");
  }
  if (initial.turns_per_interaction == 0) {
    throw InvalidValue("turns_per_interaction", "must be at least 1");
  }

  const std::size_t n = initial.population.size();

  MoranResult result;
  std::unordered_map<std::string, std::size_t> slots;
  for (const auto& p : initial.population) {
    if (slots.emplace(p->name(), result.strategy_names.size()).second) {
      result.strategy_names.push_back(p->name());
    }
  }

  Roster population = initial.population;
  result.trajectory.push_back(census(population, slots));

  RngStream selection(derive_seed(initial.seed, {kSelectionStreamTag}));
  MatchSpec match_spec;
  match_spec.turns = initial.turns_per_interaction;
  match_spec.game = initial.game;

  std::size_t generation = initial.generation;
  while (!monomorphic(population)) {
    std::vector<double> fitness(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        MatchSpec s = match_spec;
        s.seed = derive_seed(initial.seed, {generation, i, j});
        const MatchRecord rec = play_match(s, *population[i], *population[j]);
        const double len = static_cast<double>(rec.length());
        fitness[i] += rec.score_a / len;
        fitness[j] += rec.score_b / len;
      }
    }
    if (n > 1) {
      for (double& f : fitness) f /= static_cast<double>(n - 1);
    }

    double total = 0.0;
    for (double f : fitness) total += f;

    std::size_t parent = n - 1;
    if (total > 0.0) {
      const double r = selection.next_unit() * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cumulative += fitness[i];
        if (r < cumulative) {
          parent = i;
          break;
        }
      }
    } else {
      parent = static_cast<std::size_t>(selection.next_below(n));
    }
    const std::size_t replaced = static_cast<std::size_t>(selection.next_below(n));

    population[replaced] = population[parent];
    ++generation;
    ++result.generations;
    result.trajectory.push_back(census(population, slots));
  }

  result.winner = population.front()->name();
  return result;
}

std::vector<std::vector<double>> run_eco(const EcoState& initial, std::size_t generations) {
  const std::size_t n = initial.proportions.size();
  if (n == 0) throw InvalidValue("proportions", "needs at least one strategy");
  if (initial.payoff_matrix.size() != n) {
    throw InvalidValue("payoff_matrix", "must be square and match the proportions");
  }
  for (const auto& row : initial.payoff_matrix) {
    if (row.size() != n) {
      throw InvalidValue("payoff_matrix", "must be square and match the proportions");
    }
  }

  std::vector<double> x = initial.proportions;
  double mass = 0.0;
  for (double v : x) {
    if (v < 0.0) throw InvalidValue("proportions", "must be nonnegative");
    mass += v;
  }
  if (mass <= 0.0) throw InvalidValue("proportions", "must have positive total mass");
  for (double& v : x) v /= mass;

  std::vector<std::vector<double>> trajectory;
  trajectory.reserve(generations + 1);
  trajectory.push_back(x);

  for (std::size_t step = 0; step < generations; ++step) {
    std::vector<double> f(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) f[i] += initial.payoff_matrix[i][j] * x[j];
    }
    double phi = 0.0;
    for (std::size_t i = 0; i < n; ++i) phi += x[i] * f[i];
    if (phi == 0.0) {
      throw DegenerateFitness("mean population fitness is zero at step " +
                              std::to_string(step));
    }
    std::vector<double> next(n, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = x[i] * f[i] / phi;
      sum += next[i];
    }
    for (double& v : next) v /= sum;
    x = std::move(next);
    trajectory.push_back(x);
  }
  return trajectory;
}

}  // namespace axl

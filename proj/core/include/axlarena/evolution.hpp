#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "axlarena/game.hpp"
#include "axlarena/strategy.hpp"

namespace axl {

// Initial state of a Moran process: one roster entry per individual.
struct MoranState {
  Roster population;
  std::size_t generation = 0;
  std::uint64_t seed = 0;
  std::size_t turns_per_interaction = 100;
  Game game{};
};

struct MoranResult {
  std::string winner;
  std::size_t generations = 0;
  std::vector<std::string> strategy_names;           // distinct, first-appearance order
  std::vector<std::vector<std::size_t>> trajectory;  // per generation, counts per name
};

// Birth-death Moran process with uniform death (reproduction may replace any
// individual, itself included). Each generation replays the full round robin
// among the current individuals with fixed-length matches seeded from
// (seed, generation, i, j); fitness is the mean per-turn score. One
// individual reproduces with probability proportional to fitness (uniformly
// when every fitness is zero), one uniformly chosen individual is replaced.
// Runs to fixation; deterministic given (seed, initial population).
MoranResult run_moran(const MoranState& initial);

// One population mix over a fixed per-turn payoff matrix (row vs column),
// e.g. dense_payoff_matrix of a completed tournament's results.
struct EcoState {
  std::vector<double> proportions;
  std::vector<std::vector<double>> payoff_matrix;
};

// Discrete replicator dynamics: f = Mx, phi = x.f, x_i' = x_i f_i / phi,
// renormalized each step to cancel drift. Returns the trajectory
// [x_0, x_1, ..., x_generations]. Throws DegenerateFitness when phi == 0.
std::vector<std::vector<double>> run_eco(const EcoState& initial, std::size_t generations);

}  // namespace axl

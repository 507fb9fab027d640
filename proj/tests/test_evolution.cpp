#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "axlarena/errors.hpp"
#include "axlarena/evolution.hpp"
#include "axlarena/strategy.hpp"

using axl::Action;

namespace {

axl::StrategyPtr builtin(const char* name) {
  auto p = axl::find_builtin(name);
  REQUIRE(p != nullptr);
  return p;
}

}  // namespace

TEST_CASE("a monomorphic population is already fixated") {
  axl::MoranState state;
  state.population = {builtin("Tit For Tat"), builtin("Tit For Tat")};
  state.seed = 5;
  const auto result = axl::run_moran(state);
  CHECK(result.winner == "Tit For Tat");
  CHECK(result.generations == 0);
  CHECK(result.strategy_names == std::vector<std::string>{"Tit For Tat"});
  REQUIRE(result.trajectory.size() == 1);
  CHECK(result.trajectory[0] == std::vector<std::size_t>{2});
}

TEST_CASE("the process runs to fixation and the census tracks every step") {
  axl::MoranState state;
  state.population = {builtin("Cooperator"), builtin("Defector"),
                      builtin("Tit For Tat"), builtin("Grudger")};
  state.seed = 11;
  state.turns_per_interaction = 10;
  const auto result = axl::run_moran(state);

  CHECK(result.strategy_names ==
        std::vector<std::string>{"Cooperator", "Defector", "Tit For Tat", "Grudger"});
  REQUIRE(result.trajectory.size() == result.generations + 1);
  CHECK(result.trajectory.front() == std::vector<std::size_t>{1, 1, 1, 1});

  for (const auto& census : result.trajectory) {
    CHECK(std::accumulate(census.begin(), census.end(), std::size_t{0}) == 4);
  }
  // Census changes by at most one birth/death per generation.
  for (std::size_t g = 1; g < result.trajectory.size(); ++g) {
    std::size_t delta = 0;
    for (std::size_t k = 0; k < result.trajectory[g].size(); ++k) {
      delta += static_cast<std::size_t>(
          std::abs(static_cast<long>(result.trajectory[g][k]) -
                   static_cast<long>(result.trajectory[g - 1][k])));
    }
    CHECK(delta <= 2);
  }

  // The reported winner holds the whole final census.
  const auto& last = result.trajectory.back();
  bool winner_has_all = false;
  for (std::size_t k = 0; k < last.size(); ++k) {
    if (result.strategy_names[k] == result.winner) {
      winner_has_all = (last[k] == 4);
    } else {
      CHECK(last[k] == 0);
    }
  }
  CHECK(winner_has_all);
}

TEST_CASE("moran runs are reproducible and seed-sensitive") {
  axl::MoranState state;
  state.population = {builtin("Cooperator"), builtin("Defector"),
                      builtin("Random 0.5")};
  state.turns_per_interaction = 5;

  state.seed = 21;
  const auto a = axl::run_moran(state);
  const auto b = axl::run_moran(state);
  CHECK(a.winner == b.winner);
  CHECK(a.generations == b.generations);
  CHECK(a.trajectory == b.trajectory);

  // Across many seeds the outcome distribution is nondegenerate.
  int defector_wins = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    state.seed = seed;
    if (axl::run_moran(state).winner == "Defector") ++defector_wins;
  }
  CHECK(defector_wins > 0);
  CHECK(defector_wins < 40);
}

TEST_CASE("an all-defector matchup still fixates despite zero-heavy fitness") {
  // Defector vs Defector yields positive scores, but Cooperator vs Defector
  // gives the cooperator zero; the uniform fallback only triggers when the
  // total is zero, which needs engineering: a 2-player population where the
  // lone match gives both sides zero is impossible under standard payoffs,
  // so just check a defector-only population terminates immediately.
  axl::MoranState state;
  state.population = {builtin("Defector"), builtin("Defector"),
                      builtin("Defector")};
  state.seed = 3;
  const auto result = axl::run_moran(state);
  CHECK(result.winner == "Defector");
  CHECK(result.generations == 0);
}

TEST_CASE("moran rejects an empty population and zero-turn matches") {
  axl::MoranState empty;
  empty.seed = 1;
  CHECK_THROWS_AS((void)axl::run_moran(empty), axl::InvalidValue);

  axl::MoranState zero;
  zero.population = {builtin("Cooperator"), builtin("Defector")};
  zero.turns_per_interaction = 0;
  CHECK_THROWS_AS((void)axl::run_moran(zero), axl::InvalidValue);
}

namespace {

// Tit For Tat under a different name: behaviorally neutral mutant.
class Mirror : public axl::Strategy {
 public:
  Mirror() : Strategy("Mirror", {1.0, false, false, false, false, false}) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, axl::RngStream&) const override {
    return opp.empty() ? Action::C : opp.back();
  }
};

}  // namespace

TEST_CASE("a neutral mutant fixates with probability one over N") {
  // Selection cannot separate identical behaviors, so a lone mutant in a
  // population of 3 wins 1/3 of runs. 600 runs, five standard errors.
  auto mutant = std::make_shared<Mirror>();
  auto resident = builtin("Tit For Tat");
  axl::MoranState state;
  state.turns_per_interaction = 5;
  int mutant_wins = 0;
  const int runs = 600;
  for (int r = 0; r < runs; ++r) {
    state.population = {resident, resident, mutant};
    state.seed = static_cast<std::uint64_t>(r) + 50000;
    if (axl::run_moran(state).winner == "Mirror") ++mutant_wins;
  }
  const double freq = static_cast<double>(mutant_wins) / runs;
  const double expect = 1.0 / 3.0;
  const double margin = 5.0 * std::sqrt(expect * (1.0 - expect) / runs);
  CHECK(std::abs(freq - expect) <= margin);
}

TEST_CASE("replicator dynamics favor the dominant strategy") {
  axl::EcoState eco;
  eco.proportions = {0.5, 0.5};
  eco.payoff_matrix = {{3.0, 0.0}, {5.0, 1.0}};
  // Convergence is quadratic; by step 9 the share saturates at exactly 1.0
  // in double precision, so the strictness window stops at 8.
  const auto traj = axl::run_eco(eco, 8);
  REQUIRE(traj.size() == 9);
  CHECK(traj[0] == std::vector<double>{0.5, 0.5});

  for (std::size_t t = 1; t < traj.size(); ++t) {
    CHECK(traj[t][1] > traj[t - 1][1]);  // defector share strictly grows
    CHECK(std::abs(traj[t][0] + traj[t][1] - 1.0) <= 1e-12);
  }
  CHECK(traj.back()[1] > 0.95);
}

TEST_CASE("eco fixed points are exact") {
  axl::EcoState eco;
  eco.proportions = {0.0, 1.0};
  eco.payoff_matrix = {{3.0, 0.0}, {5.0, 1.0}};
  const auto traj = axl::run_eco(eco, 5);
  for (const auto& x : traj) {
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 1.0);
  }
}

TEST_CASE("eco normalizes the starting mix") {
  axl::EcoState eco;
  eco.proportions = {1.0, 3.0};
  eco.payoff_matrix = {{1.0, 1.0}, {1.0, 1.0}};
  const auto traj = axl::run_eco(eco, 3);
  CHECK(traj[0] == std::vector<double>{0.25, 0.75});
  // Identical payoffs: the mix is stationary.
  CHECK(traj.back()[0] == doctest::Approx(0.25));
}

TEST_CASE("eco one-step update matches the replicator formula") {
  axl::EcoState eco;
  eco.proportions = {0.6, 0.4};
  eco.payoff_matrix = {{2.0, 1.0}, {4.0, 3.0}};
  // f0 = 2*0.6 + 1*0.4 = 1.6;  f1 = 4*0.6 + 3*0.4 = 3.6
  // phi = 0.6*1.6 + 0.4*3.6 = 2.4
  // x0' = 0.6*1.6/2.4 = 0.4;  x1' = 0.4*3.6/2.4 = 0.6
  const auto traj = axl::run_eco(eco, 1);
  CHECK(traj[1][0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(traj[1][1] == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("eco input validation") {
  axl::EcoState bad_shape;
  bad_shape.proportions = {0.5, 0.5};
  bad_shape.payoff_matrix = {{1.0, 2.0}};
  CHECK_THROWS_AS((void)axl::run_eco(bad_shape, 1), axl::InvalidValue);

  axl::EcoState ragged;
  ragged.proportions = {0.5, 0.5};
  ragged.payoff_matrix = {{1.0, 2.0}, {1.0}};
  CHECK_THROWS_AS((void)axl::run_eco(ragged, 1), axl::InvalidValue);

  axl::EcoState negative;
  negative.proportions = {-0.5, 1.5};
  negative.payoff_matrix = {{1.0, 1.0}, {1.0, 1.0}};
  CHECK_THROWS_AS((void)axl::run_eco(negative, 1), axl::InvalidValue);

  axl::EcoState zero_mass;
  zero_mass.proportions = {0.0, 0.0};
  zero_mass.payoff_matrix = {{1.0, 1.0}, {1.0, 1.0}};
  CHECK_THROWS_AS((void)axl::run_eco(zero_mass, 1), axl::InvalidValue);
}

TEST_CASE("zero mean fitness is reported, not divided by") {
  axl::EcoState eco;
  eco.proportions = {1.0};
  eco.payoff_matrix = {{0.0}};
  CHECK_THROWS_AS((void)axl::run_eco(eco, 1), axl::DegenerateFitness);
}

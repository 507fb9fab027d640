#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "axlarena/errors.hpp"
#include "axlarena/match.hpp"
#include "axlarena/strategy.hpp"
#include "axlarena/transformers.hpp"

using axl::Action;

namespace {

axl::StrategyPtr builtin(const char* name) {
  auto p = axl::find_builtin(name);
  REQUIRE(p != nullptr);
  return p;
}

std::string trace(const axl::Strategy& a, const axl::Strategy& b, std::size_t turns,
                  std::uint64_t seed = 3) {
  axl::MatchSpec spec;
  spec.turns = turns;
  spec.seed = seed;
  return axl::to_string(axl::play_match(spec, a, b).actions_a);
}

}  // namespace

TEST_CASE("Flip negates every decision and keeps the classifier") {
  auto flipped = axl::flip_all(builtin("Tit For Tat"));
  CHECK(flipped->name() == "Flip(Tit For Tat)");
  CHECK(flipped->classifier().memory_depth == 1.0);
  CHECK_FALSE(flipped->classifier().stochastic);

  // Inverted TFT opens with D and then plays the opposite of the copy.
  CHECK(trace(*flipped, *builtin("Cooperator"), 4) == "DDDD");
  CHECK(trace(*flipped, *builtin("Defector"), 4) == "DCCC");

  auto doubled = axl::flip_all(flipped);
  CHECK(doubled->name() == "Flip(Flip(Tit For Tat))");
  CHECK(trace(*doubled, *builtin("Defector"), 4) ==
        trace(*builtin("Tit For Tat"), *builtin("Defector"), 4));
}

TEST_CASE("Noisy flips with the given rate and is classified stochastic") {
  auto noisy = axl::noisy_flip(0.1, builtin("Cooperator"));
  CHECK(noisy->name() == "Noisy(0.1,Cooperator)");
  CHECK(noisy->classifier().stochastic);

  // Zero rate still counts as stochastic and still burns one draw a round.
  auto zero = axl::noisy_flip(0.0, builtin("Cooperator"));
  CHECK(zero->name() == "Noisy(0,Cooperator)");
  CHECK(zero->classifier().stochastic);
  CHECK(trace(*zero, *builtin("Cooperator"), 10) == "CCCCCCCCCC");

  auto one = axl::noisy_flip(1.0, builtin("Cooperator"));
  CHECK(one->name() == "Noisy(1,Cooperator)");
  CHECK(trace(*one, *builtin("Cooperator"), 10) == "DDDDDDDDDD");

  // Long-run flip frequency approaches the rate.
  axl::MatchSpec spec;
  spec.turns = 20000;
  spec.seed = 77;
  const auto rec = axl::play_match(spec, *noisy, *builtin("Cooperator"));
  std::size_t flips = 0;
  for (Action a : rec.actions_a) {
    if (a == Action::D) ++flips;
  }
  CHECK(static_cast<double>(flips) / static_cast<double>(spec.turns) ==
        doctest::Approx(0.1).epsilon(0.1));

  CHECK_THROWS_AS((void)axl::noisy_flip(-0.01, builtin("Cooperator")), axl::InvalidValue);
  CHECK_THROWS_AS((void)axl::noisy_flip(1.01, builtin("Cooperator")), axl::InvalidValue);
}

TEST_CASE("Initial plays the prefix then hands over") {
  auto opener = axl::initial_plays(axl::history_from_string("DDC"),
                                   builtin("Tit For Tat"));
  CHECK(opener->name() == "Initial(DDC,Tit For Tat)");
  CHECK(opener->classifier().memory_depth == 3.0);

  // Against a cooperator: scripted DDC, then TFT echoes the C's.
  CHECK(trace(*opener, *builtin("Cooperator"), 6) == "DDCCCC");

  // The inner rule sees the full history, including the scripted rounds.
  auto grudge = axl::initial_plays(axl::history_from_string("C"), builtin("Grudger"));
  CHECK(trace(*grudge, *builtin("Defector"), 5) == "CDDDD");
}

TEST_CASE("Final plays the suffix over the known tail") {
  auto closer = axl::final_plays(axl::history_from_string("DD"),
                                 builtin("Cooperator"));
  CHECK(closer->name() == "Final(DD,Cooperator)");
  CHECK(closer->classifier().uses_game_length);
  CHECK(closer->classifier().memory_depth == 2.0);

  CHECK(trace(*closer, *builtin("Cooperator"), 6) == "CCCCDD");
  CHECK(trace(*closer, *builtin("Cooperator"), 2) == "DD");

  // Unknown length is a strategy fault, contextualized by the match.
  axl::MatchSpec spec;
  spec.turns = 0;
  spec.prob_end = 0.5;
  spec.seed = 4;
  CHECK_THROWS_AS((void)axl::play_match(spec, *closer, *builtin("Cooperator")),
                  axl::LengthUnknown);
}

TEST_CASE("transformers compose") {
  // Cooperate, but open with one D and close with one D.
  auto shell = axl::initial_plays(
      axl::history_from_string("D"),
      axl::final_plays(axl::history_from_string("D"), builtin("Cooperator")));
  CHECK(shell->name() == "Initial(D,Final(D,Cooperator))");
  CHECK(trace(*shell, *builtin("Cooperator"), 5) == "DCCCD");
  CHECK(shell->classifier().uses_game_length);
}

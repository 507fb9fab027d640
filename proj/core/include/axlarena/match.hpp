#pragma once

#include <cstdint>

#include "axlarena/action.hpp"
#include "axlarena/game.hpp"

namespace axl {

class Strategy;

// Parameters of one match. Exactly one length mode governs:
//   prob_end == 0  -> exactly `turns` rounds are played (turns >= 1);
//   prob_end  > 0  -> after each round the match ends with probability
//                     prob_end (geometric length, minimum one round) and
//                     `turns` is only an upper cap, 0 meaning uncapped.
// `noise` flips each player's chosen action independently per round.
struct MatchSpec {
  std::size_t turns = 200;
  double prob_end = 0.0;
  double noise = 0.0;
  Game game{};
  std::uint64_t seed = 0;
};

// Full interaction history of one match. Histories record the actions as
// actually played (after noise), so the score fields are always the
// round-by-round sums over Game::score of the recorded actions.
struct MatchRecord {
  History actions_a;
  History actions_b;
  double score_a = 0.0;
  double score_b = 0.0;
  std::uint64_t seed = 0;

  std::size_t length() const { return actions_a.size(); }
};

// Plays one match. Both strategies observe the full post-noise histories
// of both sides. Four independent SplitMix64 streams are derived from
// spec.seed (one per player, one for noise, one for termination), making
// the record a pure function of (spec, strategy identities) no matter how
// matches are scheduled across threads. Draw order within a round: player
// a's flip, then player b's flip; no noise draw is consumed when
// noise == 0. Throws InvalidValue for an out-of-range spec and propagates
// StrategyFault from the decision rules.
MatchRecord play_match(const MatchSpec& spec, const Strategy& a, const Strategy& b);

}  // namespace axl

#pragma once

#include "axlarena/action.hpp"
#include "axlarena/strategy.hpp"

namespace axl {

// Strategy wrappers. Each returns a new strategy around `inner` with a
// deterministically decorated name matching the config-file syntax, e.g.
// "Flip(Cooperator)" or "Noisy(0.1,Tit For Tat)".

// Plays the opposite of whatever `inner` decides.
StrategyPtr flip_all(StrategyPtr inner);

// Flips inner's action with probability p each round; marks the result
// stochastic. p must lie in [0, 1].
StrategyPtr noisy_flip(double p, StrategyPtr inner);

// Plays `prefix` for the first rounds, then delegates.
StrategyPtr initial_plays(History prefix, StrategyPtr inner);

// Plays `suffix` over the last rounds of the match; marks the result as
// using the game length. Deciding in a match of unknown length throws
// LengthUnknown.
StrategyPtr final_plays(History suffix, StrategyPtr inner);

}  // namespace axl

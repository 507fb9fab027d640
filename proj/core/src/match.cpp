#include "axlarena/match.hpp"

#include <optional>

#include "axlarena/errors.hpp"
#include "axlarena/rng.hpp"
#include "axlarena/strategy.hpp"

namespace axl {

namespace {

// Stream roles within one match; each gets its own seed via derive_seed so
// a rule that never draws leaves the other streams untouched.
constexpr std::uint64_t kStreamPlayerA = 0;
constexpr std::uint64_t kStreamPlayerB = 1;
constexpr std::uint64_t kStreamNoise = 2;
constexpr std::uint64_t kStreamTermination = 3;

void check_spec(const MatchSpec& spec) {
  if (spec.noise < 0.0 || spec.noise > 1.0) {
    throw InvalidValue("noise", "must lie in [0, 1]");
  }
  if (spec.prob_end < 0.0 || spec.prob_end > 1.0) {
    throw InvalidValue("prob_end", "must lie in [0, 1]");
  }
  if (spec.prob_end == 0.0 && spec.turns == 0) {
    throw InvalidValue("turns", "fixed-length matches need at least one turn");
  }
}

}  // namespace

MatchRecord play_match(const MatchSpec& spec, const Strategy& a, const Strategy& b) {
  check_spec(spec);

  RngStream rng_a(derive_seed(spec.seed, {kStreamPlayerA}));
  RngStream rng_b(derive_seed(spec.seed, {kStreamPlayerB}));
  RngStream rng_noise(derive_seed(spec.seed, {kStreamNoise}));
  RngStream rng_end(derive_seed(spec.seed, {kStreamTermination}));

  const bool fixed_length = spec.prob_end == 0.0;
  std::optional<std::size_t> known_length;
  if (fixed_length) known_length = spec.turns;

  MatchRecord rec;
  rec.seed = spec.seed;
  if (fixed_length) {
    rec.actions_a.reserve(spec.turns);
    rec.actions_b.reserve(spec.turns);
  }

  while (true) {
    Action act_a = a.decide(rec.actions_a, rec.actions_b, known_length, rng_a);
    Action act_b = b.decide(rec.actions_b, rec.actions_a, known_length, rng_b);
    if (spec.noise > 0.0) {
      if (rng_noise.bernoulli(spec.noise)) act_a = flip(act_a);
      if (rng_noise.bernoulli(spec.noise)) act_b = flip(act_b);
    }
    rec.actions_a.push_back(act_a);
    rec.actions_b.push_back(act_b);
    auto [pa, pb] = spec.game.score(act_a, act_b);
    rec.score_a += pa;
    rec.score_b += pb;

    const std::size_t played = rec.actions_a.size();
    if (fixed_length) {
      if (played == spec.turns) break;
    } else {
      if (spec.turns != 0 && played == spec.turns) break;  // cap before the draw
      if (rng_end.bernoulli(spec.prob_end)) break;
    }
  }
  return rec;
}

}  // namespace axl

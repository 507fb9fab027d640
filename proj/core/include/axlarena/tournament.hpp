#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "axlarena/match.hpp"
#include "axlarena/rng.hpp"
#include "axlarena/strategy.hpp"

namespace axl {

struct TournamentSpec {
  Roster players;
  std::size_t turns = 200;
  std::size_t repetitions = 10;
  double noise = 0.0;
  double prob_end = 0.0;
  double edge_prob = 1.0;  // probability a pair meets; 1.0 = full round robin
  std::uint64_t master_seed = 0;
  bool with_self_play = true;
  Game game{};
};

// One played pairing. index_a <= index_b always.
struct ArchiveEntry {
  std::size_t repetition = 0;
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  MatchRecord record;
};

// Every interaction of a tournament in canonical (repetition, a, b) order,
// regardless of how the matches were scheduled.
struct InteractionArchive {
  std::vector<ArchiveEntry> entries;
};

// Stable mixing of (a, b, repetition) into a per-match seed: the SplitMix64
// fold of derive_seed. Independent of execution order and worker count.
std::uint64_t derive_match_seed(std::uint64_t master_seed, std::uint64_t a,
                                std::uint64_t b, std::uint64_t repetition);

// The pairings of one repetition, ascending (a, b). With edge_prob == 1 this
// is the full round robin (self-pairs included iff with_self_play) and `rng`
// is untouched; otherwise each candidate pair is kept independently with
// probability edge_prob, one draw per candidate in ascending order.
std::vector<std::pair<std::size_t, std::size_t>> generate_edges(
    const TournamentSpec& spec, std::size_t repetition, RngStream& rng);

// Plays every generated edge of every repetition, each match seeded with
// derive_match_seed(master_seed, a, b, repetition). Matches run on `jobs`
// worker threads; the archive is byte-identical for every value of `jobs`.
// StrategyFault is rethrown with (repetition, a, b) context.
InteractionArchive run_tournament(const TournamentSpec& spec, unsigned jobs = 1);

}  // namespace axl

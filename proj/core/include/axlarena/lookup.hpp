#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "axlarena/action.hpp"
#include "axlarena/strategy.hpp"

namespace axl {

// Total mapping from (opponent's first m actions, last n pairs of
// (own, opponent) actions) to an action, with a fixed warm-up of
// max(m, n) initial plays.
//
// Keys are packed into an index as  first_bits * 4^n + pair_bits  where
// C = 0 and D = 1, the first actions are taken oldest-first (oldest most
// significant), and each pair contributes (own << 1) | opp, oldest pair
// most significant.
struct LookupTable {
  std::size_t first_m = 0;
  std::size_t pairs_n = 0;
  std::vector<Action> entries;          // size 2^m * 4^n
  std::vector<Action> initial_actions;  // length max(m, n)

  static std::size_t num_keys(std::size_t m, std::size_t n);

  // Validates the sizes above; throws InvalidValue on mismatch.
  static LookupTable make(std::size_t m, std::size_t n, std::vector<Action> entries,
                          std::vector<Action> initial_actions);

  std::size_t key_index(std::span<const Action> own, std::span<const Action> opp) const;
};

// Warm-up rounds play initial_actions[round]; afterwards the packed key
// selects the table entry. Throws KeyMissing if the table is not total
// (a construction bug, unreachable through LookupTable::make).
Action lookup_decide(const LookupTable& table, std::span<const Action> own,
                     std::span<const Action> opp);

// Wraps a table as a strategy. Default name is "LookerUp(m,n)".
StrategyPtr make_looker_up(LookupTable table, std::string name = {});

// Plain-text round-trip format:
//   line 1:        "m n"
//   one line/key:  "<first-m chars><2n pair chars> -> <action>", ascending key
//   last line:     "initial: <max(m,n) chars>"
std::string lookup_table_to_text(const LookupTable& table);
LookupTable lookup_table_from_text(std::string_view text);

}  // namespace axl

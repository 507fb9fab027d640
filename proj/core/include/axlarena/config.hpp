#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "axlarena/strategy.hpp"
#include "axlarena/tournament.hpp"

namespace axl {

// A tournament run as declared on the command line or in a config file.
struct RunConfig {
  enum class Format { csv, json };

  std::vector<std::string> players;
  std::size_t turns = 200;
  std::size_t repetitions = 10;
  double noise = 0.0;
  double prob_end = 0.0;
  double edge_prob = 1.0;
  std::uint64_t seed = 0;
  bool with_self_play = true;
  unsigned jobs = 1;
  std::string output_dir = ".";
  Format format = Format::json;
};

// Resolves one player name: a builtin, or transformer syntax
//   Flip(<name>) | Initial(<CD seq>,<name>) | Final(<CD seq>,<name>)
//   | Noisy(<p>,<name>)
// nested to any depth. Throws UnknownStrategy with the nearest builtin
// name as suggestion.
StrategyPtr resolve_strategy(std::string_view name);

Roster resolve_players(const std::vector<std::string>& names);

// Splits a comma-separated player list, ignoring commas nested inside
// transformer parentheses.
std::vector<std::string> split_player_list(std::string_view list);

// Reads a config file, TOML (subset: scalar and string-array assignments)
// or JSON, auto-detected by extension. Validates ranges and resolves every
// player name. Throws InvalidValue / UnknownStrategy / IoFailure.
RunConfig parse_config_file(const std::string& path);

// Range checks + player resolution for a fully merged config.
void validate_run_config(const RunConfig& config);

// Resolves players and copies the run parameters over. Validates.
TournamentSpec to_tournament_spec(const RunConfig& config);

}  // namespace axl

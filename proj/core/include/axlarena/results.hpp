#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axlarena/tournament.hpp"

namespace axl {

struct FiveNumberSummary {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

struct MoralityRecord {
  double cooperation_rating = 0;   // C plays / total plays, all matches
  double good_partner_rating = 0;  // fraction of matches with own C count >= opponent's
};

// Aggregated tournament analytics. Matrix cells are empty when the pairing
// never met (sparse tournaments, disabled self-play). Raw play counters are
// kept alongside the rates so downstream metrics can reweight exactly.
struct ResultSet {
  std::vector<std::string> names;
  std::size_t repetitions = 0;

  // Mean per-turn score against all opponents of one repetition, self-play
  // excluded; 0 when the strategy played nobody in that repetition.
  std::vector<std::vector<double>> normalized_scores;  // [strategy][repetition]

  // Permutation of strategies by descending median normalized score,
  // ties broken by ascending roster index.
  std::vector<std::size_t> ranking;

  // Matches won outright (strictly greater total); self-play has no winner.
  std::vector<std::vector<std::size_t>> wins;  // [strategy][repetition]

  // Mean per-turn score of row against column, all repetitions pooled.
  std::vector<std::vector<std::optional<double>>> payoff_matrix;

  // Fraction of C plays of row against column.
  std::vector<std::vector<std::optional<double>>> cooperation_rates;

  // Raw counters behind the rates.
  std::vector<std::vector<std::uint64_t>> plays;  // rounds of row vs column
  std::vector<std::vector<std::uint64_t>> coops;  // C plays of row vs column
  std::vector<std::size_t> matches_played;        // participations (self matches count twice)
  std::vector<std::size_t> good_partner_matches;  // participations with own C count >= opponent's
};

// Throws EmptyArchive when there is nothing to aggregate.
ResultSet build_result_set(const InteractionArchive& archive, const TournamentSpec& spec);

// (name, median normalized score) in ranking order.
std::vector<std::pair<std::string, double>> rank_strategies(const ResultSet& rs);

std::vector<MoralityRecord> morality_metrics(const ResultSet& rs);

// Five-number summary of each strategy's normalized scores across
// repetitions; quartiles by linear interpolation.
std::vector<FiveNumberSummary> emit_boxplot_data(const ResultSet& rs);

// Payoff matrix as plain doubles; throws InvalidValue if any cell is empty
// (the ecological analysis needs every pairing, self-play included).
std::vector<std::vector<double>> dense_payoff_matrix(const ResultSet& rs);

}  // namespace axl

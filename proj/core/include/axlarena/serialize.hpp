#pragma once

#include <iosfwd>
#include <string>

#include "axlarena/config.hpp"
#include "axlarena/results.hpp"
#include "axlarena/tournament.hpp"

namespace axl {

// CSV with header
//   repetition,index_a,index_b,name_a,name_b,actions_a,actions_b,score_a,score_b
// one row per archive entry in canonical order, LF line endings, actions as
// C/D strings, scores in shortest round-trip decimals. Fields are quoted
// RFC-4180 style only when they contain a comma or quote.
void write_interactions(const InteractionArchive& archive, const Roster& players,
                        const std::string& path);
void write_interactions(const InteractionArchive& archive, const Roster& players,
                        std::ostream& out);

// Inverse of write_interactions over the recorded columns. Match seeds are
// not serialized, so the seed field of every record reads back as 0.
InteractionArchive read_interactions(const std::string& path);
InteractionArchive read_interactions(std::istream& in);

// format json: one object with keys, in order: names, ranking,
// median_normalized_scores, wins, payoff_matrix, cooperation_rates,
// morality, boxplot. Numbers keep full precision; empty matrix cells are
// null. format csv: one row per strategy in ranking order with the
// headline statistics.
void write_summary(const ResultSet& rs, const std::string& path, RunConfig::Format format);
void write_summary(const ResultSet& rs, std::ostream& out, RunConfig::Format format);

}  // namespace axl

#include "axlarena/serialize.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "axlarena/errors.hpp"
#include "axlarena/text.hpp"

#include "json.hpp"

namespace axl {

namespace {

constexpr std::string_view kInteractionsHeader =
    "repetition,index_a,index_b,name_a,name_b,actions_a,actions_b,score_a,score_b";

std::string csv_field(std::string_view raw) {
  const bool needs_quotes =
      raw.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(raw);
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// One CSV record; handles RFC-4180 quoting. `line` has no trailing newline.
std::vector<std::string> parse_csv_row(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  for (;;) {
    std::string field;
    if (i < line.size() && line[i] == '"') {
      ++i;
      for (;;) {
        if (i >= line.size()) {
          throw InvalidValue("interactions",
                             "unterminated quote on line " + std::to_string(line_no));
        }
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            ++i;
            break;
          }
        } else {
          field += line[i++];
        }
      }
      if (i < line.size() && line[i] != ',') {
        throw InvalidValue("interactions",
                           "garbage after quoted field on line " + std::to_string(line_no));
      }
    } else {
      while (i < line.size() && line[i] != ',') field += line[i++];
    }
    fields.push_back(std::move(field));
    if (i >= line.size()) break;
    ++i;  // the comma
  }
  return fields;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  return f;
}

void check_write(const std::ostream& out, const std::string& path) {
  if (!out.good()) throw IoFailure("failed while writing '" + path + "'");
}

}  // namespace

void write_interactions(const InteractionArchive& archive, const Roster& players,
                        std::ostream& out) {
  out << kInteractionsHeader << '\n';
  for (const ArchiveEntry& e : archive.entries) {
    out << e.repetition << ',' << e.index_a << ',' << e.index_b << ','
        << csv_field(players[e.index_a]->name()) << ','
        << csv_field(players[e.index_b]->name()) << ','
        << to_string(e.record.actions_a) << ',' << to_string(e.record.actions_b) << ','
        << decimal_string(e.record.score_a) << ',' << decimal_string(e.record.score_b)
        << '\n';
  }
}

void write_interactions(const InteractionArchive& archive, const Roster& players,
                        const std::string& path) {
  std::ofstream f = open_for_write(path);
  write_interactions(archive, players, f);
  check_write(f, path);
}

InteractionArchive read_interactions(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidValue("interactions", "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kInteractionsHeader) {
    throw InvalidValue("interactions", "unexpected header: " + line);
  }

  InteractionArchive archive;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = parse_csv_row(line, line_no);
    if (fields.size() != 9) {
      throw InvalidValue("interactions", "expected 9 fields on line " +
                                             std::to_string(line_no) + ", got " +
                                             std::to_string(fields.size()));
    }
    ArchiveEntry e;
    e.repetition = parse_u64(fields[0], "repetition");
    e.index_a = parse_u64(fields[1], "index_a");
    e.index_b = parse_u64(fields[2], "index_b");
    e.record.actions_a = history_from_string(fields[5]);
    e.record.actions_b = history_from_string(fields[6]);
    e.record.score_a = parse_double(fields[7], "score_a");
    e.record.score_b = parse_double(fields[8], "score_b");
    if (e.record.actions_a.size() != e.record.actions_b.size()) {
      throw InvalidValue("interactions",
                         "history length mismatch on line " + std::to_string(line_no));
    }
    archive.entries.push_back(std::move(e));
  }
  return archive;
}

InteractionArchive read_interactions(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for reading");
  return read_interactions(f);
}

void write_summary(const ResultSet& rs, std::ostream& out, RunConfig::Format format) {
  const auto ranked = rank_strategies(rs);
  const auto morality = morality_metrics(rs);
  const auto boxplot = emit_boxplot_data(rs);
  const std::size_t n = rs.names.size();

  if (format == RunConfig::Format::csv) {
    out << "rank,name,median_normalized_score,total_wins,cooperation_rating,"
           "good_partner_rating\n";
    for (std::size_t k = 0; k < rs.ranking.size(); ++k) {
      const std::size_t i = rs.ranking[k];
      std::size_t total_wins = 0;
      for (std::size_t w : rs.wins[i]) total_wins += w;
      out << (k + 1) << ',' << csv_field(rs.names[i]) << ','
          << decimal_string(ranked[k].second) << ',' << total_wins << ','
          << decimal_string(morality[i].cooperation_rating) << ','
          << decimal_string(morality[i].good_partner_rating) << '\n';
    }
    return;
  }

  nlohmann::ordered_json root;
  root["names"] = rs.names;
  nlohmann::ordered_json ranking = nlohmann::ordered_json::array();
  for (std::size_t i : rs.ranking) ranking.push_back(rs.names[i]);
  root["ranking"] = std::move(ranking);
  nlohmann::ordered_json medians = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) medians.push_back(boxplot[i].median);
  root["median_normalized_scores"] = std::move(medians);
  root["wins"] = rs.wins;

  auto matrix_json = [n](const std::vector<std::vector<std::optional<double>>>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j]) {
          row.push_back(*m[i][j]);
        } else {
          row.push_back(nullptr);
        }
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  root["payoff_matrix"] = matrix_json(rs.payoff_matrix);
  root["cooperation_rates"] = matrix_json(rs.cooperation_rates);

  nlohmann::ordered_json morality_json = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::ordered_json entry;
    entry["cooperation_rating"] = morality[i].cooperation_rating;
    entry["good_partner_rating"] = morality[i].good_partner_rating;
    morality_json.push_back(std::move(entry));
  }
  root["morality"] = std::move(morality_json);

  nlohmann::ordered_json boxplot_json = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::ordered_json entry;
    entry["min"] = boxplot[i].min;
    entry["q1"] = boxplot[i].q1;
    entry["median"] = boxplot[i].median;
    entry["q3"] = boxplot[i].q3;
    entry["max"] = boxplot[i].max;
    boxplot_json.push_back(std::move(entry));
  }
  root["boxplot"] = std::move(boxplot_json);

  out << root.dump(2) << '\n';
}

void write_summary(const ResultSet& rs, const std::string& path, RunConfig::Format format) {
  std::ofstream f = open_for_write(path);
  write_summary(rs, f, format);
  check_write(f, path);
}

}  // namespace axl

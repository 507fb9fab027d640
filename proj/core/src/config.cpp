#include "axlarena/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "axlarena/errors.hpp"
#include "axlarena/text.hpp"
#include "axlarena/transformers.hpp"

#include "json.hpp"

namespace axl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitution = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, substitution});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::string nearest_builtin(std::string_view name) {
  std::string best;
  std::size_t best_distance = static_cast<std::size_t>(-1);
  for (const auto& s : stewart_roster()) {
    const std::size_t d = levenshtein(name, s->name());
    if (d < best_distance) {
      best_distance = d;
      best = s->name();
    }
  }
  return best;
}

// The body of "Kind(...)", or nullopt when `name` is not that wrapper.
std::optional<std::string_view> wrapper_body(std::string_view name, std::string_view kind) {
  if (name.size() < kind.size() + 2 || name.back() != ')') return std::nullopt;
  if (name.substr(0, kind.size()) != kind || name[kind.size()] != '(') return std::nullopt;
  return name.substr(kind.size() + 1, name.size() - kind.size() - 2);
}

// First-argument split of a two-argument wrapper body; the first argument
// (a probability or a C/D sequence) never contains a comma itself.
std::pair<std::string_view, std::string_view> split_wrapper_args(std::string_view body,
                                                                 std::string_view kind) {
  const std::size_t comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw InvalidValue("players", std::string(kind) + " needs two arguments");
  }
  return {trim(body.substr(0, comma)), trim(body.substr(comma + 1))};
}

History sequence_arg(std::string_view text, std::string_view kind) {
  History h = history_from_string(text);
  if (h.empty()) {
    throw InvalidValue("players", std::string(kind) + " needs a nonempty C/D sequence");
  }
  return h;
}

}  // namespace

StrategyPtr resolve_strategy(std::string_view raw) {
  const std::string_view name = trim(raw);
  if (name.empty()) throw InvalidValue("players", "empty player name");

  if (StrategyPtr builtin = find_builtin(name)) return builtin;

  if (auto body = wrapper_body(name, "Flip")) {
    return flip_all(resolve_strategy(*body));
  }
  if (auto body = wrapper_body(name, "Noisy")) {
    auto [arg, inner] = split_wrapper_args(*body, "Noisy");
    return noisy_flip(parse_double(arg, "players"), resolve_strategy(inner));
  }
  if (auto body = wrapper_body(name, "Initial")) {
    auto [arg, inner] = split_wrapper_args(*body, "Initial");
    return initial_plays(sequence_arg(arg, "Initial"), resolve_strategy(inner));
  }
  if (auto body = wrapper_body(name, "Final")) {
    auto [arg, inner] = split_wrapper_args(*body, "Final");
    return final_plays(sequence_arg(arg, "Final"), resolve_strategy(inner));
  }

  throw UnknownStrategy(std::string(name), nearest_builtin(name));
}

Roster resolve_players(const std::vector<std::string>& names) {
  Roster roster;
  roster.reserve(names.size());
  for (const auto& name : names) roster.push_back(resolve_strategy(name));
  return roster;
}

std::vector<std::string> split_player_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= list.size(); ++i) {
    if (i < list.size() && list[i] == '(') ++depth;
    if (i < list.size() && list[i] == ')' && depth > 0) --depth;
    if (i == list.size() || (list[i] == ',' && depth == 0)) {
      const std::string_view piece = trim(list.substr(start, i - start));
      if (piece.empty()) throw InvalidValue("players", "empty player name in list");
      out.emplace_back(piece);
      start = i + 1;
    }
  }
  return out;
}

namespace {

// Per-field range checks that do not depend on other fields.
void check_field_ranges(const RunConfig& c) {
  if (!(c.noise >= 0.0 && c.noise <= 1.0)) {
    throw InvalidValue("noise", "must lie in [0, 1]");
  }
  if (!(c.prob_end >= 0.0 && c.prob_end <= 1.0)) {
    throw InvalidValue("prob_end", "must lie in [0, 1]");
  }
  if (!(c.edge_prob > 0.0 && c.edge_prob <= 1.0)) {
    throw InvalidValue("edge_prob", "must lie in (0, 1]");
  }
  if (c.repetitions == 0) throw InvalidValue("repetitions", "must be at least 1");
}

struct TomlValue {
  enum class Kind { string, array, bare } kind = Kind::bare;
  std::string text;                // string contents or the bare token
  std::vector<std::string> items;  // array of strings
};

std::string parse_basic_string(std::string_view raw, std::string_view context) {
  if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"') {
    throw InvalidValue("config", std::string(context) + ": expected a quoted string");
  }
  std::string out;
  for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i] == '\\') {
      if (i + 2 >= raw.size()) {
        throw InvalidValue("config", std::string(context) + ": dangling escape");
      }
      const char e = raw[++i];
      if (e == '"') {
        out += '"';
      } else if (e == '\\') {
        out += '\\';
      } else if (e == 'n') {
        out += '\n';
      } else if (e == 't') {
        out += '\t';
      } else {
        throw InvalidValue("config", std::string(context) + ": unsupported escape");
      }
    } else if (raw[i] == '"') {
      throw InvalidValue("config", std::string(context) + ": stray quote inside string");
    } else {
      out += raw[i];
    }
  }
  return out;
}

std::vector<std::string> parse_string_array(std::string_view raw, std::string_view context) {
  if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']') {
    throw InvalidValue("config", std::string(context) + ": expected a [...] array");
  }
  std::vector<std::string> items;
  std::string_view body = trim(raw.substr(1, raw.size() - 2));
  while (!body.empty()) {
    if (body.front() != '"') {
      throw InvalidValue("config", std::string(context) + ": array items must be strings");
    }
    // Find the closing quote, honoring backslash escapes.
    std::size_t end = 1;
    while (end < body.size() && body[end] != '"') {
      if (body[end] == '\\') ++end;
      ++end;
    }
    if (end >= body.size()) {
      throw InvalidValue("config", std::string(context) + ": unterminated string");
    }
    items.push_back(parse_basic_string(body.substr(0, end + 1), context));
    body = trim(body.substr(end + 1));
    if (!body.empty()) {
      if (body.front() != ',') {
        throw InvalidValue("config", std::string(context) + ": expected a comma");
      }
      body = trim(body.substr(1));  // trailing comma allowed
    }
  }
  return items;
}

// Cuts a '#' comment, honoring quotes.
std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (in_string && line[i] == '\\') {
      ++i;
    } else if (line[i] == '"') {
      in_string = !in_string;
    } else if (!in_string && line[i] == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::map<std::string, TomlValue> parse_toml_subset(const std::string& content) {
  std::map<std::string, TomlValue> values;
  std::istringstream stream(content);
  std::string raw_line;
  std::size_t line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    if (!raw_line.empty() && raw_line.back() == '\r') raw_line.pop_back();
    const std::string_view line = trim(strip_comment(raw_line));
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidValue("config", "line " + std::to_string(line_no) +
                                       ": expected key = value");
    }
    const std::string key{trim(line.substr(0, eq))};
    if (!valid_key(key)) {
      throw InvalidValue("config", "line " + std::to_string(line_no) + ": bad key");
    }
    if (values.count(key)) {
      throw InvalidValue("config", "duplicate key '" + key + "'");
    }
    const std::string_view rhs = trim(line.substr(eq + 1));
    if (rhs.empty()) {
      throw InvalidValue("config", "line " + std::to_string(line_no) + ": missing value");
    }

    TomlValue v;
    if (rhs.front() == '"') {
      v.kind = TomlValue::Kind::string;
      v.text = parse_basic_string(rhs, key);
    } else if (rhs.front() == '[') {
      v.kind = TomlValue::Kind::array;
      v.items = parse_string_array(rhs, key);
    } else {
      v.kind = TomlValue::Kind::bare;
      v.text = std::string(rhs);
    }
    values.emplace(key, std::move(v));
  }
  return values;
}

RunConfig::Format parse_format(std::string_view text) {
  if (text == "csv") return RunConfig::Format::csv;
  if (text == "json") return RunConfig::Format::json;
  throw InvalidValue("format", "must be 'csv' or 'json'");
}

bool parse_bool_token(std::string_view text, std::string_view field) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw InvalidValue(std::string(field), "must be true or false");
}

RunConfig config_from_toml(const std::string& content) {
  RunConfig c;
  const auto values = parse_toml_subset(content);
  for (const auto& [key, v] : values) {
    const bool is_string = v.kind == TomlValue::Kind::string;
    const bool is_array = v.kind == TomlValue::Kind::array;
    const bool is_bare = v.kind == TomlValue::Kind::bare;
    if (key == "players") {
      if (!is_array) throw InvalidValue("players", "must be an array of strings");
      c.players = v.items;
    } else if (key == "turns") {
      if (!is_bare) throw InvalidValue("turns", "must be an integer");
      c.turns = parse_u64(v.text, "turns");
    } else if (key == "repetitions") {
      if (!is_bare) throw InvalidValue("repetitions", "must be an integer");
      c.repetitions = parse_u64(v.text, "repetitions");
    } else if (key == "noise") {
      if (!is_bare) throw InvalidValue("noise", "must be a number");
      c.noise = parse_double(v.text, "noise");
    } else if (key == "prob_end") {
      if (!is_bare) throw InvalidValue("prob_end", "must be a number");
      c.prob_end = parse_double(v.text, "prob_end");
    } else if (key == "edge_prob") {
      if (!is_bare) throw InvalidValue("edge_prob", "must be a number");
      c.edge_prob = parse_double(v.text, "edge_prob");
    } else if (key == "seed") {
      if (!is_bare) throw InvalidValue("seed", "must be an integer");
      c.seed = parse_u64(v.text, "seed");
    } else if (key == "self_play") {
      if (!is_bare) throw InvalidValue("self_play", "must be true or false");
      c.with_self_play = parse_bool_token(v.text, "self_play");
    } else if (key == "jobs") {
      if (!is_bare) throw InvalidValue("jobs", "must be an integer");
      c.jobs = static_cast<unsigned>(parse_u64(v.text, "jobs"));
    } else if (key == "output_dir") {
      if (!is_string) throw InvalidValue("output_dir", "must be a string");
      c.output_dir = v.text;
    } else if (key == "format") {
      if (!is_string) throw InvalidValue("format", "must be a string");
      c.format = parse_format(v.text);
    } else {
      throw InvalidValue("config", "unknown key '" + key + "'");
    }
  }
  return c;
}

std::uint64_t json_u64(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  throw InvalidValue(field, "must be a nonnegative integer");
}

RunConfig config_from_json(const std::string& content) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidValue("config", e.what());
  }
  if (!root.is_object()) throw InvalidValue("config", "top level must be an object");

  RunConfig c;
  for (const auto& [key, v] : root.items()) {
    if (key == "players") {
      if (!v.is_array()) throw InvalidValue("players", "must be an array of strings");
      for (const auto& item : v) {
        if (!item.is_string()) throw InvalidValue("players", "must be an array of strings");
        c.players.push_back(item.get<std::string>());
      }
    } else if (key == "turns") {
      c.turns = json_u64(v, "turns");
    } else if (key == "repetitions") {
      c.repetitions = json_u64(v, "repetitions");
    } else if (key == "noise" || key == "prob_end" || key == "edge_prob") {
      if (!v.is_number()) throw InvalidValue(key, "must be a number");
      const double d = v.get<double>();
      if (key == "noise") c.noise = d;
      if (key == "prob_end") c.prob_end = d;
      if (key == "edge_prob") c.edge_prob = d;
    } else if (key == "seed") {
      c.seed = json_u64(v, "seed");
    } else if (key == "self_play") {
      if (!v.is_boolean()) throw InvalidValue("self_play", "must be true or false");
      c.with_self_play = v.get<bool>();
    } else if (key == "jobs") {
      c.jobs = static_cast<unsigned>(json_u64(v, "jobs"));
    } else if (key == "output_dir") {
      if (!v.is_string()) throw InvalidValue("output_dir", "must be a string");
      c.output_dir = v.get<std::string>();
    } else if (key == "format") {
      if (!v.is_string()) throw InvalidValue("format", "must be a string");
      c.format = parse_format(v.get<std::string>());
    } else {
      throw InvalidValue("config", "unknown key '" + key + "'");
    }
  }
  return c;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << f.rdbuf();
  const std::string content = buffer.str();

  RunConfig config;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    config = config_from_json(content);
  } else if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
    config = config_from_toml(content);
  } else {
    throw InvalidValue("config", "unsupported config extension (use .toml or .json)");
  }

  // The file may omit players (flags can supply them later), but whatever
  // it does declare must already be sound.
  check_field_ranges(config);
  if (!config.players.empty()) resolve_players(config.players);
  return config;
}

void validate_run_config(const RunConfig& config) {
  if (config.players.empty()) {
    throw InvalidValue("players", "at least one player is required");
  }
  resolve_players(config.players);
  check_field_ranges(config);
  if (config.prob_end == 0.0 && config.turns == 0) {
    throw InvalidValue("turns", "must be at least 1 for fixed-length matches");
  }
}

TournamentSpec to_tournament_spec(const RunConfig& config) {
  validate_run_config(config);
  TournamentSpec spec;
  spec.players = resolve_players(config.players);
  spec.turns = config.turns;
  spec.repetitions = config.repetitions;
  spec.noise = config.noise;
  spec.prob_end = config.prob_end;
  spec.edge_prob = config.edge_prob;
  spec.master_seed = config.seed;
  spec.with_self_play = config.with_self_play;
  return spec;
}

}  // namespace axl

#include "axlarena/lookup.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "axlarena/errors.hpp"
#include "axlarena/text.hpp"

namespace axl {

namespace {

constexpr std::size_t kMaxKeyBits = 24;  // 16M keys; far beyond any sane table

std::size_t key_bits(std::size_t m, std::size_t n) { return m + 2 * n; }

std::size_t pair_mask(std::size_t n) { return (std::size_t{1} << (2 * n)) - 1; }

}  // namespace

std::size_t LookupTable::num_keys(std::size_t m, std::size_t n) {
  return std::size_t{1} << key_bits(m, n);
}

LookupTable LookupTable::make(std::size_t m, std::size_t n, std::vector<Action> entries,
                              std::vector<Action> initial_actions) {
  if (key_bits(m, n) > kMaxKeyBits) {
    throw InvalidValue("first_m",
                       "table key of " + std::to_string(key_bits(m, n)) +
                           " bits exceeds the supported " + std::to_string(kMaxKeyBits));
  }
  const std::size_t want = num_keys(m, n);
  if (entries.size() != want) {
    throw InvalidValue("entries", "expected " + std::to_string(want) + " entries, got " +
                                      std::to_string(entries.size()));
  }
  const std::size_t warmup = std::max(m, n);
  if (initial_actions.size() != warmup) {
    throw InvalidValue("initial_actions",
                       "expected " + std::to_string(warmup) + " initial actions, got " +
                           std::to_string(initial_actions.size()));
  }
  LookupTable t;
  t.first_m = m;
  t.pairs_n = n;
  t.entries = std::move(entries);
  t.initial_actions = std::move(initial_actions);
  return t;
}

std::size_t LookupTable::key_index(std::span<const Action> own,
                                   std::span<const Action> opp) const {
  if (opp.size() < first_m || own.size() < pairs_n || opp.size() < pairs_n) {
    throw KeyMissing("lookup key requested before the warm-up completed");
  }
  std::size_t first_bits = 0;
  for (std::size_t i = 0; i < first_m; ++i) {
    first_bits = (first_bits << 1) | (opp[i] == Action::D ? 1u : 0u);
  }
  std::size_t pair_bits = 0;
  const std::size_t start_own = own.size() - pairs_n;
  const std::size_t start_opp = opp.size() - pairs_n;
  for (std::size_t i = 0; i < pairs_n; ++i) {
    const std::size_t pair = ((own[start_own + i] == Action::D ? 1u : 0u) << 1) |
                             (opp[start_opp + i] == Action::D ? 1u : 0u);
    pair_bits = (pair_bits << 2) | pair;
  }
  return (first_bits << (2 * pairs_n)) | pair_bits;
}

Action lookup_decide(const LookupTable& table, std::span<const Action> own,
                     std::span<const Action> opp) {
  if (own.size() < table.initial_actions.size()) {
    return table.initial_actions[own.size()];
  }
  const std::size_t key = table.key_index(own, opp);
  if (key >= table.entries.size()) {
    throw KeyMissing("lookup table has no entry for key " + std::to_string(key));
  }
  return table.entries[key];
}

namespace {

class LookerUp final : public Strategy {
 public:
  LookerUp(LookupTable table, std::string name)
      : Strategy(std::move(name), classify(table)), table_(std::move(table)) {}

  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    return lookup_decide(table_, self, opp);
  }

 private:
  // Any dependence on the opponent's opening moves never expires.
  static Classifier classify(const LookupTable& t) {
    Classifier c;
    c.memory_depth = t.first_m > 0 ? std::numeric_limits<double>::infinity()
                                   : static_cast<double>(t.pairs_n);
    return c;
  }

  LookupTable table_;
};

}  // namespace

StrategyPtr make_looker_up(LookupTable table, std::string name) {
  if (name.empty()) {
    name = "LookerUp(" + std::to_string(table.first_m) + "," +
           std::to_string(table.pairs_n) + ")";
  }
  return std::make_shared<LookerUp>(std::move(table), std::move(name));
}

std::string lookup_table_to_text(const LookupTable& table) {
  std::string out;
  out += std::to_string(table.first_m) + " " + std::to_string(table.pairs_n) + "\n";
  const std::size_t m = table.first_m;
  const std::size_t n = table.pairs_n;
  for (std::size_t key = 0; key < table.entries.size(); ++key) {
    const std::size_t first_bits = key >> (2 * n);
    const std::size_t pair_bits = key & pair_mask(n);
    for (std::size_t i = 0; i < m; ++i) {
      out += ((first_bits >> (m - 1 - i)) & 1u) ? 'D' : 'C';
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t pair = (pair_bits >> (2 * (n - 1 - i))) & 3u;
      out += (pair & 2u) ? 'D' : 'C';
      out += (pair & 1u) ? 'D' : 'C';
    }
    out += " -> ";
    out += to_char(table.entries[key]);
    out += '\n';
  }
  out += "initial:";
  if (!table.initial_actions.empty()) {
    out += ' ';
    for (Action a : table.initial_actions) out += to_char(a);
  }
  out += '\n';
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

LookupTable lookup_table_from_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw InvalidValue("lookup_table", "empty table text");

  std::string_view header = lines[0];
  const std::size_t space = header.find(' ');
  if (space == std::string_view::npos) {
    throw InvalidValue("lookup_table", "header must be \"m n\"");
  }
  const std::size_t m = parse_u64(header.substr(0, space), "first_m");
  const std::size_t n = parse_u64(header.substr(space + 1), "pairs_n");
  if (key_bits(m, n) > kMaxKeyBits) {
    throw InvalidValue("lookup_table", "table key too wide");
  }

  const std::size_t keys = LookupTable::num_keys(m, n);
  if (lines.size() != keys + 2) {
    throw InvalidValue("lookup_table", "expected " + std::to_string(keys + 2) +
                                           " lines, got " + std::to_string(lines.size()));
  }

  std::vector<Action> entries(keys, Action::C);
  const std::size_t key_chars = m + 2 * n;
  for (std::size_t key = 0; key < keys; ++key) {
    std::string_view line = lines[1 + key];
    const std::string_view arrow = " -> ";
    if (line.size() != key_chars + arrow.size() + 1 ||
        line.substr(key_chars, arrow.size()) != arrow) {
      throw InvalidValue("lookup_table", "malformed key line " + std::to_string(key + 2));
    }
    std::size_t parsed = 0;
    for (std::size_t i = 0; i < key_chars; ++i) {
      parsed = (parsed << 1) | (action_from_char(line[i]) == Action::D ? 1u : 0u);
    }
    if (parsed != key) {
      throw InvalidValue("lookup_table",
                         "keys out of order at line " + std::to_string(key + 2));
    }
    entries[key] = action_from_char(line.back());
  }

  std::string_view last = lines.back();
  const std::string_view prefix = "initial:";
  if (last.substr(0, prefix.size()) != prefix) {
    throw InvalidValue("lookup_table", "missing \"initial:\" line");
  }
  std::string_view tail = last.substr(prefix.size());
  if (!tail.empty() && tail.front() == ' ') tail.remove_prefix(1);
  std::vector<Action> initial;
  initial.reserve(tail.size());
  for (char c : tail) initial.push_back(action_from_char(c));

  return LookupTable::make(m, n, std::move(entries), std::move(initial));
}

}  // namespace axl

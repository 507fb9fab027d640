#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "axlarena/errors.hpp"
#include "axlarena/lookup.hpp"
#include "axlarena/match.hpp"
#include "axlarena/rng.hpp"
#include "axlarena/strategy.hpp"

using axl::Action;
using axl::LookupTable;

namespace {

constexpr Action C = Action::C;
constexpr Action D = Action::D;

// The (0,1) table that reproduces Tit For Tat: the key is the last
// (own, opponent) pair and the entry copies the opponent half, warm-up C.
LookupTable tft_table() {
  return LookupTable::make(0, 1, {C, D, C, D}, {C});
}

// Plays back a scripted opponent against a strategy, fixed length.
class Script : public axl::Strategy {
 public:
  explicit Script(axl::History moves)
      : Strategy("Script", {}), moves_(std::move(moves)) {}
  Action decide(std::span<const Action> self, std::span<const Action>,
                std::optional<std::size_t>, axl::RngStream&) const override {
    return moves_[self.size() % moves_.size()];
  }

 private:
  axl::History moves_;
};

}  // namespace

TEST_CASE("key space sizes") {
  CHECK(LookupTable::num_keys(0, 0) == 1);
  CHECK(LookupTable::num_keys(0, 1) == 4);
  CHECK(LookupTable::num_keys(1, 1) == 8);
  CHECK(LookupTable::num_keys(2, 2) == 64);
  CHECK(LookupTable::num_keys(3, 3) == 512);
}

TEST_CASE("make validates the component sizes") {
  CHECK_THROWS_AS(LookupTable::make(0, 1, {C, D, C}, {C}), axl::InvalidValue);
  CHECK_THROWS_AS(LookupTable::make(0, 1, {C, D}, {}), axl::InvalidValue);
  CHECK_THROWS_AS(LookupTable::make(2, 1, {C, D}, {C, C}), axl::InvalidValue);
  // 2^m * 4^n must stay within the key-width limit.
  CHECK_THROWS_AS(LookupTable::make(30, 0, {}, {C}), axl::InvalidValue);
}

TEST_CASE("key packing puts first-m bits above the pair bits") {
  // m = 2, n = 1: index = (f0 f1 own opp) as a 4-bit number.
  std::vector<Action> entries(LookupTable::num_keys(2, 1), C);
  const LookupTable t = LookupTable::make(2, 1, entries, {C, C});

  const axl::History own = axl::history_from_string("CCC");
  const axl::History opp = axl::history_from_string("DCD");
  // First two opponent actions D, C -> 10b. Last pair (own=C, opp=D) -> 01b.
  CHECK(t.key_index(own, opp) == 0b1001);

  const axl::History own2 = axl::history_from_string("DDD");
  const axl::History opp2 = axl::history_from_string("CDC");
  // First two C, D -> 01b. Last pair (D, C) -> 10b.
  CHECK(t.key_index(own2, opp2) == 0b0110);
}

TEST_CASE("multi-pair keys are packed oldest pair first") {
  std::vector<Action> entries(LookupTable::num_keys(0, 2), C);
  const LookupTable t = LookupTable::make(0, 2, entries, {C, C});
  const axl::History own = axl::history_from_string("CD");
  const axl::History opp = axl::history_from_string("DC");
  // Pairs: (C,D) -> 01, then (D,C) -> 10; index 0110b.
  CHECK(t.key_index(own, opp) == 0b0110);
}

TEST_CASE("asking for a key during warm-up is a fault") {
  const LookupTable t = tft_table();
  const axl::History empty;
  CHECK_THROWS_AS((void)t.key_index(empty, empty), axl::KeyMissing);
}

TEST_CASE("the TFT table impersonates Tit For Tat") {
  auto looker = axl::make_looker_up(tft_table());
  CHECK(looker->name() == "LookerUp(0,1)");
  auto tft = axl::find_builtin("Tit For Tat");
  REQUIRE(tft != nullptr);

  // Same decisions over 100 random opponent scripts, 50 rounds each.
  axl::RngStream gen(2026);
  for (int trial = 0; trial < 100; ++trial) {
    axl::History script;
    for (int i = 0; i < 50; ++i) {
      script.push_back(gen.next_u64() & 1 ? D : C);
    }
    Script opp(script);
    axl::MatchSpec spec;
    spec.turns = 50;
    spec.seed = static_cast<std::uint64_t>(trial);
    const auto a = axl::play_match(spec, *looker, opp);
    const auto b = axl::play_match(spec, *tft, opp);
    CHECK(a.actions_a == b.actions_a);
  }
}

TEST_CASE("warm-up plays the scripted initial actions") {
  // m = 1, n = 2 -> two warm-up rounds, here C then D.
  std::vector<Action> entries(LookupTable::num_keys(1, 2), C);
  const LookupTable t = LookupTable::make(1, 2, entries, {C, D});
  auto looker = axl::make_looker_up(t, "Probe");
  CHECK(looker->name() == "Probe");

  Script coop(axl::history_from_string("C"));
  axl::MatchSpec spec;
  spec.turns = 4;
  spec.seed = 1;
  const auto rec = axl::play_match(spec, *looker, coop);
  CHECK(axl::to_string(rec.actions_a).substr(0, 2) == "CD");
}

TEST_CASE("classifier reflects the table shape") {
  // Any m > 0 pins memory to the opening, i.e. unbounded depth.
  std::vector<Action> entries(LookupTable::num_keys(1, 1), C);
  auto with_m = axl::make_looker_up(LookupTable::make(1, 1, entries, {C}));
  CHECK(std::isinf(with_m->classifier().memory_depth));

  auto no_m = axl::make_looker_up(tft_table());
  CHECK(no_m->classifier().memory_depth == 1.0);
  CHECK_FALSE(no_m->classifier().stochastic);
}

TEST_CASE("text round-trip is exact") {
  const LookupTable t = tft_table();
  const std::string text = axl::lookup_table_to_text(t);
  CHECK(text ==
        "0 1\n"
        "CC -> C\n"
        "CD -> D\n"
        "DC -> C\n"
        "DD -> D\n"
        "initial: C\n");

  const LookupTable back = axl::lookup_table_from_text(text);
  CHECK(back.first_m == t.first_m);
  CHECK(back.pairs_n == t.pairs_n);
  CHECK(back.entries == t.entries);
  CHECK(back.initial_actions == t.initial_actions);
}

TEST_CASE("text round-trip survives a nontrivial shape") {
  axl::RngStream gen(555);
  const std::size_t m = 2, n = 2;
  std::vector<Action> entries;
  for (std::size_t i = 0; i < LookupTable::num_keys(m, n); ++i) {
    entries.push_back(gen.next_u64() & 1 ? D : C);
  }
  const LookupTable t = LookupTable::make(m, n, entries, {C, D});
  const LookupTable back = axl::lookup_table_from_text(axl::lookup_table_to_text(t));
  CHECK(back.first_m == m);
  CHECK(back.pairs_n == n);
  CHECK(back.entries == t.entries);
  CHECK(back.initial_actions == t.initial_actions);
}

TEST_CASE("the degenerate (0,0) table round-trips without a trailing space") {
  const LookupTable t = LookupTable::make(0, 0, {D}, {});
  const std::string text = axl::lookup_table_to_text(t);
  CHECK(text ==
        "0 0\n"
        " -> D\n"
        "initial:\n");
  const LookupTable back = axl::lookup_table_from_text(text);
  CHECK(back.entries == t.entries);
  CHECK(back.initial_actions.empty());
}

TEST_CASE("malformed table text is rejected") {
  CHECK_THROWS_AS((void)axl::lookup_table_from_text(""), axl::InvalidValue);
  CHECK_THROWS_AS((void)axl::lookup_table_from_text("0\nCC -> C\n"), axl::InvalidValue);
  // Keys out of order.
  CHECK_THROWS_AS((void)axl::lookup_table_from_text("0 1\n"
                                                    "CD -> D\n"
                                                    "CC -> C\n"
                                                    "DC -> C\n"
                                                    "DD -> D\n"
                                                    "initial: C\n"),
                  axl::InvalidValue);
  // Missing a key line.
  CHECK_THROWS_AS((void)axl::lookup_table_from_text("0 1\n"
                                                    "CC -> C\n"
                                                    "CD -> D\n"
                                                    "DC -> C\n"
                                                    "initial: C\n"),
                  axl::InvalidValue);
  // Bad action character.
  CHECK_THROWS_AS((void)axl::lookup_table_from_text("0 1\n"
                                                    "CC -> C\n"
                                                    "CD -> X\n"
                                                    "DC -> C\n"
                                                    "DD -> D\n"
                                                    "initial: C\n"),
                  axl::InvalidValue);
  // Wrong warm-up length.
  CHECK_THROWS_AS((void)axl::lookup_table_from_text("0 1\n"
                                                    "CC -> C\n"
                                                    "CD -> D\n"
                                                    "DC -> C\n"
                                                    "DD -> D\n"
                                                    "initial: CC\n"),
                  axl::InvalidValue);
}

TEST_CASE("carriage returns and trailing blank lines are tolerated on input") {
  const std::string text =
      "0 1\r\n"
      "CC -> C\r\n"
      "CD -> D\r\n"
      "DC -> C\r\n"
      "DD -> D\r\n"
      "initial: C\r\n"
      "\r\n";
  const LookupTable back = axl::lookup_table_from_text(text);
  CHECK(back.entries == tft_table().entries);
}

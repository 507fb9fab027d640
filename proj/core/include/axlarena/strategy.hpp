#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "axlarena/action.hpp"
#include "axlarena/rng.hpp"

namespace axl {

// Metadata describing what a decision rule consumes. For every builtin,
// `stochastic` is true exactly when the rule draws from its RNG stream.
struct Classifier {
  double memory_depth = 0.0;  // infinity() for unbounded memory
  bool stochastic = false;
  bool uses_game_length = false;
  bool inspects_source = false;
  bool manipulates_source = false;
  bool manipulates_state = false;
};

// A named decision rule plus its classifier. Rules are pure functions of
// the two post-noise histories (and, in fixed-length matches, the known
// length), so instances carry no per-match state and are safe to share
// between concurrently running matches.
class Strategy {
 public:
  Strategy(std::string name, Classifier classifier)
      : name_(std::move(name)), classifier_(classifier) {}
  virtual ~Strategy() = default;

  // `self` and `opponent` are equal-length histories, oldest round first.
  // `match_length` is set only when the length is known in advance.
  // `rng` is this player's private stream for the current match.
  virtual Action decide(std::span<const Action> self,
                        std::span<const Action> opponent,
                        std::optional<std::size_t> match_length,
                        RngStream& rng) const = 0;

  const std::string& name() const { return name_; }
  const Classifier& classifier() const { return classifier_; }

 private:
  std::string name_;
  Classifier classifier_;
};

using StrategyPtr = std::shared_ptr<const Strategy>;
using Roster = std::vector<StrategyPtr>;

// The 19 strategies of the Stewart-Plotkin 2012 tournament, in the
// published order. Names are stable identifiers used in config files and
// CSV output.
const Roster& stewart_roster();

// Cooperator, Defector, Tit For Tat, Grudger, Random 0.5.
const Roster& demo_roster();

// Exact-name lookup over the builtin rosters; nullptr when absent.
StrategyPtr find_builtin(std::string_view name);

// Stable-ordered sublist of strategies whose classifier satisfies `pred`.
Roster filter_by_classifier(const Roster& roster,
                            const std::function<bool(const Classifier&)>& pred);

}  // namespace axl

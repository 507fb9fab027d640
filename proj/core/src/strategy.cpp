#include "axlarena/strategy.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace axl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Classifier deterministic(double memory_depth) {
  Classifier c;
  c.memory_depth = memory_depth;
  return c;
}

Classifier stochastic(double memory_depth) {
  Classifier c;
  c.memory_depth = memory_depth;
  c.stochastic = true;
  return c;
}

Action tft_rule(std::span<const Action> opp) {
  return opp.empty() ? Action::C : opp.back();
}

bool defected(std::span<const Action> h) {
  return std::find(h.begin(), h.end(), Action::D) != h.end();
}

class Cooperator final : public Strategy {
 public:
  Cooperator() : Strategy("Cooperator", deterministic(0)) {}
  Action decide(std::span<const Action>, std::span<const Action>,
                std::optional<std::size_t>, RngStream&) const override {
    return Action::C;
  }
};

class Defector final : public Strategy {
 public:
  Defector() : Strategy("Defector", deterministic(0)) {}
  Action decide(std::span<const Action>, std::span<const Action>,
                std::optional<std::size_t>, RngStream&) const override {
    return Action::D;
  }
};

class RandomChoice final : public Strategy {
 public:
  RandomChoice(std::string name, double p_cooperate)
      : Strategy(std::move(name), stochastic(0)), p_(p_cooperate) {}
  Action decide(std::span<const Action>, std::span<const Action>,
                std::optional<std::size_t>, RngStream& rng) const override {
    return rng.bernoulli(p_) ? Action::C : Action::D;
  }

 private:
  double p_;
};

class TitForTat final : public Strategy {
 public:
  TitForTat() : Strategy("Tit For Tat", deterministic(1)) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    return tft_rule(opp);
  }
};

class TitFor2Tats final : public Strategy {
 public:
  TitFor2Tats() : Strategy("Tit For 2 Tats", deterministic(2)) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    const std::size_t n = opp.size();
    if (n >= 2 && opp[n - 1] == Action::D && opp[n - 2] == Action::D) return Action::D;
    return Action::C;
  }
};

// Retaliates against a defection for three rounds.
class HardTitForTat final : public Strategy {
 public:
  HardTitForTat() : Strategy("Hard Tit For Tat", deterministic(3)) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    const std::size_t window = std::min<std::size_t>(3, opp.size());
    return defected(opp.last(window)) ? Action::D : Action::C;
  }
};

// Defects when two consecutive defections appear among the last three rounds.
class HardTitFor2Tats final : public Strategy {
 public:
  HardTitFor2Tats() : Strategy("Hard Tit For 2 Tats", deterministic(3)) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    const std::size_t window = std::min<std::size_t>(3, opp.size());
    auto last = opp.last(window);
    for (std::size_t i = 1; i < last.size(); ++i) {
      if (last[i - 1] == Action::D && last[i] == Action::D) return Action::D;
    }
    return Action::C;
  }
};

class Grudger final : public Strategy {
 public:
  Grudger() : Strategy("Grudger", deterministic(kInf)) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    return defected(opp) ? Action::D : Action::C;
  }
};

// Tit For Tat with a 10% chance of defecting instead of cooperating.
class Joss final : public Strategy {
 public:
  Joss() : Strategy("Joss 0.9", stochastic(1)) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream& rng) const override {
    if (tft_rule(opp) == Action::D) return Action::D;
    return rng.bernoulli(0.9) ? Action::C : Action::D;
  }
};

// Repeats its move after R or T (opponent cooperated), switches otherwise.
class WinStayLoseShift final : public Strategy {
 public:
  WinStayLoseShift() : Strategy("Win-Stay Lose-Shift", deterministic(1)) {}
  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    if (self.empty()) return Action::C;
    return opp.back() == Action::C ? self.back() : flip(self.back());
  }
};

// Cooperation probabilities keyed by the previous round (own, opponent).
class MemoryOne final : public Strategy {
 public:
  MemoryOne(std::string name, double p_cc, double p_cd, double p_dc, double p_dd,
            Action opening)
      : Strategy(std::move(name), stochastic(1)),
        probs_{p_cc, p_cd, p_dc, p_dd},
        opening_(opening) {}

  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream& rng) const override {
    if (self.empty()) return opening_;
    const std::size_t state = (self.back() == Action::D ? 2u : 0u) +
                              (opp.back() == Action::D ? 1u : 0u);
    return rng.bernoulli(probs_[state]) ? Action::C : Action::D;
  }

 private:
  std::array<double, 4> probs_;
  Action opening_;
};

// Probing openers share this shape: a fixed opening, a trigger decided by
// rounds 2-3 (1-indexed) of the opponent, then either a permanent response
// or Tit For Tat.
class Prober final : public Strategy {
 public:
  Prober() : Strategy("Prober", deterministic(kInf)) {}
  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    static constexpr Action opening[] = {Action::D, Action::C, Action::C};
    if (self.size() < 3) return opening[self.size()];
    if (opp[1] == Action::C && opp[2] == Action::C) return Action::D;
    return tft_rule(opp);
  }
};

class Prober2 final : public Strategy {
 public:
  Prober2() : Strategy("Prober 2", deterministic(kInf)) {}
  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    static constexpr Action opening[] = {Action::D, Action::C, Action::C};
    if (self.size() < 3) return opening[self.size()];
    if (opp[1] == Action::D && opp[2] == Action::C) return Action::C;
    return tft_rule(opp);
  }
};

class Prober3 final : public Strategy {
 public:
  Prober3() : Strategy("Prober 3", deterministic(kInf)) {}
  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    static constexpr Action opening[] = {Action::D, Action::C};
    if (self.size() < 2) return opening[self.size()];
    if (opp[1] == Action::C) return Action::D;
    return tft_rule(opp);
  }
};

class HardProber final : public Strategy {
 public:
  HardProber() : Strategy("Hard Prober", deterministic(kInf)) {}
  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    static constexpr Action opening[] = {Action::D, Action::D, Action::C, Action::C};
    if (self.size() < 4) return opening[self.size()];
    if (opp[1] == Action::C && opp[2] == Action::C) return Action::D;
    return tft_rule(opp);
  }
};

// Joss for twenty rounds, then defects forever against opponents whose
// first twenty moves repeat a cycle of period 1..10, else Tit For Tat.
class Calculator final : public Strategy {
 public:
  Calculator() : Strategy("Calculator", stochastic(kInf)) {}
  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream& rng) const override {
    if (self.size() < 20) {
      if (tft_rule(opp) == Action::D) return Action::D;
      return rng.bernoulli(0.9) ? Action::C : Action::D;
    }
    if (is_cyclic(opp.first(20))) return Action::D;
    return tft_rule(opp);
  }

 private:
  static bool is_cyclic(std::span<const Action> h) {
    for (std::size_t period = 1; period <= 10; ++period) {
      bool tiles = true;
      for (std::size_t i = period; i < h.size(); ++i) {
        if (h[i] != h[i % period]) {
          tiles = false;
          break;
        }
      }
      if (tiles) return true;
    }
    return false;
  }
};

class HardGoByMajority final : public Strategy {
 public:
  HardGoByMajority() : Strategy("Hard Go By Majority", deterministic(kInf)) {}
  Action decide(std::span<const Action>, std::span<const Action> opp,
                std::optional<std::size_t>, RngStream&) const override {
    const auto coops = std::count(opp.begin(), opp.end(), Action::C);
    const auto defects = static_cast<std::ptrdiff_t>(opp.size()) - coops;
    return coops > defects ? Action::C : Action::D;
  }
};

}  // namespace

const Roster& stewart_roster() {
  static const Roster roster = {
      std::make_shared<Cooperator>(),
      std::make_shared<Defector>(),
      std::make_shared<MemoryOne>("ZD-Extort-2", 8.0 / 9.0, 0.5, 1.0 / 3.0, 0.0, Action::C),
      std::make_shared<Joss>(),
      std::make_shared<HardTitForTat>(),
      std::make_shared<HardTitFor2Tats>(),
      std::make_shared<TitForTat>(),
      std::make_shared<Grudger>(),
      std::make_shared<TitFor2Tats>(),
      std::make_shared<WinStayLoseShift>(),
      std::make_shared<RandomChoice>("Random 0.5", 0.5),
      std::make_shared<MemoryOne>("ZD-GTFT-2", 1.0, 1.0 / 8.0, 1.0, 1.0 / 4.0, Action::C),
      std::make_shared<MemoryOne>("GTFT 0.33", 1.0, 1.0 / 3.0, 1.0, 1.0 / 3.0, Action::C),
      std::make_shared<HardProber>(),
      std::make_shared<Prober>(),
      std::make_shared<Prober2>(),
      std::make_shared<Prober3>(),
      std::make_shared<Calculator>(),
      std::make_shared<HardGoByMajority>(),
  };
  return roster;
}

const Roster& demo_roster() {
  static const Roster roster = {
      find_builtin("Cooperator"),  find_builtin("Defector"), find_builtin("Tit For Tat"),
      find_builtin("Grudger"),     find_builtin("Random 0.5"),
  };
  return roster;
}

StrategyPtr find_builtin(std::string_view name) {
  for (const auto& s : stewart_roster()) {
    if (s->name() == name) return s;
  }
  return nullptr;
}

Roster filter_by_classifier(const Roster& roster,
                            const std::function<bool(const Classifier&)>& pred) {
  Roster out;
  for (const auto& s : roster) {
    if (pred(s->classifier())) out.push_back(s);
  }
  return out;
}

}  // namespace axl

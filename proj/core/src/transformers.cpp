#include "axlarena/transformers.hpp"

#include <algorithm>
#include <utility>

#include "axlarena/errors.hpp"
#include "axlarena/text.hpp"

namespace axl {

namespace {

class Flip final : public Strategy {
 public:
  explicit Flip(StrategyPtr inner)
      : Strategy("Flip(" + inner->name() + ")", inner->classifier()),
        inner_(std::move(inner)) {}

  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t> match_length, RngStream& rng) const override {
    return flip(inner_->decide(self, opp, match_length, rng));
  }

 private:
  StrategyPtr inner_;
};

class Noisy final : public Strategy {
 public:
  Noisy(double p, StrategyPtr inner)
      : Strategy("Noisy(" + decimal_string(p) + "," + inner->name() + ")",
                 classify(*inner)),
        p_(p),
        inner_(std::move(inner)) {}

  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t> match_length, RngStream& rng) const override {
    const Action intended = inner_->decide(self, opp, match_length, rng);
    // Draws unconditionally so the draw count per round is fixed.
    return rng.bernoulli(p_) ? flip(intended) : intended;
  }

 private:
  static Classifier classify(const Strategy& inner) {
    Classifier c = inner.classifier();
    c.stochastic = true;
    return c;
  }

  double p_;
  StrategyPtr inner_;
};

class InitialPlays final : public Strategy {
 public:
  InitialPlays(History prefix, StrategyPtr inner)
      : Strategy("Initial(" + axl::to_string(prefix) + "," + inner->name() + ")",
                 classify(*inner, prefix.size())),
        prefix_(std::move(prefix)),
        inner_(std::move(inner)) {}

  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t> match_length, RngStream& rng) const override {
    if (self.size() < prefix_.size()) return prefix_[self.size()];
    return inner_->decide(self, opp, match_length, rng);
  }

 private:
  static Classifier classify(const Strategy& inner, std::size_t rounds) {
    Classifier c = inner.classifier();
    c.memory_depth = std::max(c.memory_depth, static_cast<double>(rounds));
    return c;
  }

  History prefix_;
  StrategyPtr inner_;
};

class FinalPlays final : public Strategy {
 public:
  FinalPlays(History suffix, StrategyPtr inner)
      : Strategy("Final(" + axl::to_string(suffix) + "," + inner->name() + ")",
                 classify(*inner, suffix.size())),
        suffix_(std::move(suffix)),
        inner_(std::move(inner)) {}

  Action decide(std::span<const Action> self, std::span<const Action> opp,
                std::optional<std::size_t> match_length, RngStream& rng) const override {
    if (!match_length) {
      throw LengthUnknown("'" + name() + "' needs the match length in advance");
    }
    const std::size_t remaining = *match_length - self.size();
    if (remaining <= suffix_.size()) return suffix_[suffix_.size() - remaining];
    return inner_->decide(self, opp, match_length, rng);
  }

 private:
  static Classifier classify(const Strategy& inner, std::size_t rounds) {
    Classifier c = inner.classifier();
    c.uses_game_length = true;
    c.memory_depth = std::max(c.memory_depth, static_cast<double>(rounds));
    return c;
  }

  History suffix_;
  StrategyPtr inner_;
};

}  // namespace

StrategyPtr flip_all(StrategyPtr inner) { return std::make_shared<Flip>(std::move(inner)); }

StrategyPtr noisy_flip(double p, StrategyPtr inner) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidValue("p", "flip probability must lie in [0, 1], got " + decimal_string(p));
  }
  return std::make_shared<Noisy>(p, std::move(inner));
}

StrategyPtr initial_plays(History prefix, StrategyPtr inner) {
  return std::make_shared<InitialPlays>(std::move(prefix), std::move(inner));
}

StrategyPtr final_plays(History suffix, StrategyPtr inner) {
  return std::make_shared<FinalPlays>(std::move(suffix), std::move(inner));
}

}  // namespace axl

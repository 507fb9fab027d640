#pragma once

#include <utility>

#include "axlarena/action.hpp"

namespace axl {

// Payoff quadruple (R, S, T, P) of the one-shot game. Construction
// enforces T > R > P > S and 2R > T + S, so a live Game is always a
// prisoner's dilemma. Default is the conventional (3, 0, 5, 1).
class Game {
 public:
  Game() : r_(3.0), s_(0.0), t_(5.0), p_(1.0) {}

  // Throws ConstraintViolation naming the first inequality that fails.
  Game(double reward, double sucker, double temptation, double punishment);

  double reward() const { return r_; }
  double sucker() const { return s_; }
  double temptation() const { return t_; }
  double punishment() const { return p_; }

  // Payoffs of one round, first element for the player who chose `a`.
  std::pair<double, double> score(Action a, Action b) const {
    if (a == Action::C) {
      return b == Action::C ? std::pair{r_, r_} : std::pair{s_, t_};
    }
    return b == Action::C ? std::pair{t_, s_} : std::pair{p_, p_};
  }

 private:
  double r_, s_, t_, p_;
};

}  // namespace axl

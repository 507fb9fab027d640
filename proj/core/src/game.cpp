#include "axlarena/game.hpp"

#include "axlarena/errors.hpp"
#include "axlarena/text.hpp"

namespace axl {

Game::Game(double reward, double sucker, double temptation, double punishment)
    : r_(reward), s_(sucker), t_(temptation), p_(punishment) {
  auto fail = [&](const std::string& which) {
    throw ConstraintViolation("not a prisoner's dilemma: " + which + " with (R,S,T,P)=(" +
                              decimal_string(r_) + "," + decimal_string(s_) + "," +
                              decimal_string(t_) + "," + decimal_string(p_) + ")");
  };
  if (!(t_ > r_)) fail("T > R fails");
  if (!(r_ > p_)) fail("R > P fails");
  if (!(p_ > s_)) fail("P > S fails");
  if (!(2 * r_ > t_ + s_)) fail("2R > T + S fails");
}

}  // namespace axl

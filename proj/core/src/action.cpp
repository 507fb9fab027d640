#include "axlarena/action.hpp"

#include "axlarena/errors.hpp"

namespace axl {

Action action_from_char(char c) {
  if (c == 'C') return Action::C;
  if (c == 'D') return Action::D;
  throw InvalidValue("action", std::string("expected 'C' or 'D', got '") + c + "'");
}

std::string to_string(const History& h) {
  std::string s;
  s.reserve(h.size());
  for (Action a : h) s.push_back(to_char(a));
  return s;
}

History history_from_string(std::string_view s) {
  History h;
  h.reserve(s.size());
  for (char c : s) h.push_back(action_from_char(c));
  return h;
}

}  // namespace axl

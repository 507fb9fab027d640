#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace axl {

// The binary move of the one-shot game.
enum class Action : std::uint8_t { C = 0, D = 1 };

constexpr Action flip(Action a) { return a == Action::C ? Action::D : Action::C; }

constexpr char to_char(Action a) { return a == Action::C ? 'C' : 'D'; }

// Throws InvalidValue for anything other than 'C' or 'D'.
Action action_from_char(char c);

// A play sequence, oldest round first.
using History = std::vector<Action>;

std::string to_string(const History& h);
History history_from_string(std::string_view s);

}  // namespace axl

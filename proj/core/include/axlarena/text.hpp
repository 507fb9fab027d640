#pragma once

#include <string>
#include <string_view>

namespace axl {

// Shortest decimal representation that round-trips the value exactly:
// "4" rather than "4.0", "0.1" rather than "0.10000000000000001".
std::string decimal_string(double value);

// Strict full-string parses; throw InvalidValue naming `field`.
double parse_double(std::string_view text, std::string_view field);
std::uint64_t parse_u64(std::string_view text, std::string_view field);

}  // namespace axl

#include "axlarena/text.hpp"

#include <charconv>
#include <cstdint>

#include "axlarena/errors.hpp"

namespace axl {

std::string decimal_string(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::string_view field) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidValue(std::string(field), "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view field) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidValue(std::string(field), "not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace axl

#pragma once

#include <charconv>
#include <string>

namespace eigenport {

/// Shortest text that is at most 17 significant digits and parses back to
/// the same double.
inline std::string format_double(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace eigenport

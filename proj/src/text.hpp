#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace hypsum::detail {

/// Shortest "%g"-style rendering used in diagnostics.
inline std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

/// Fixed significant-digit rendering for reports.
inline std::string sig_digits(double x, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

/// Shortest text that parses back to the same double.
inline std::string round_trip(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace hypsum::detail

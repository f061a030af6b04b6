#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace pegsim {

// Shortest decimal form that parses back to exactly the same double, so a
// re-exported file is byte-identical to the original. Non-finite values get
// the spellings inf, -inf, nan.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace pegsim

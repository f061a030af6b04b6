#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pegsim/config.hpp"

namespace pegsim {
namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string_view piece =
        comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
    out.emplace_back(trim(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] inline void bad_value(const std::string& key, std::string_view value,
                                   const char* want) {
  throw std::invalid_argument("config: key '" + key + "': cannot parse '" + std::string(value) +
                              "' as " + want);
}

// Finite real; config quantities reject inf and nan.
inline double parse_real(const std::string& key, std::string_view value) {
  const std::string_view v = trim(value);
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || !std::isfinite(out))
    bad_value(key, value, "a finite real");
  return out;
}

// Real as written by format_double, so inf, -inf, and nan round-trip.
inline double parse_extended_real(const std::string& key, std::string_view value) {
  const std::string_view v = trim(value);
  if (v == "inf") return std::numeric_limits<double>::infinity();
  if (v == "-inf") return -std::numeric_limits<double>::infinity();
  if (v == "nan") return std::numeric_limits<double>::quiet_NaN();
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) bad_value(key, value, "a real");
  return out;
}

inline long long parse_integer(const std::string& key, std::string_view value) {
  const std::string_view v = trim(value);
  long long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) bad_value(key, value, "an integer");
  return out;
}

inline std::uint64_t parse_seed(const std::string& key, std::string_view value) {
  const std::string_view v = trim(value);
  std::uint64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    bad_value(key, value, "an unsigned integer");
  return out;
}

inline std::vector<double> parse_real_list(const std::string& key, std::string_view value) {
  std::vector<double> out;
  for (const std::string& piece : split_list(value)) out.push_back(parse_real(key, piece));
  return out;
}

inline Interval parse_interval(const std::string& key, std::string_view value) {
  const std::vector<double> parts = parse_real_list(key, value);
  if (parts.size() != 2)
    throw std::invalid_argument("config: key '" + key + "': expected two comma-separated reals");
  return Interval{parts[0], parts[1]};
}

inline Mode parse_mode_value(const std::string& key, std::string_view value) {
  const auto mode = parse_mode(trim(value));
  if (!mode) bad_value(key, value, "CENTRALIZED or DECENTRALIZED");
  return *mode;
}

// Sets one GameConfig field from its key name; false when the key is not a
// GameConfig field. n_pursuers also resets pursuer_speeds to the default
// ladder for the new count, so callers apply it before an explicit speed
// list regardless of where it appeared in the input.
inline bool apply_game_config_key(GameConfig& cfg, const std::string& key,
                                  const std::string& value) {
  if (key == "n_pursuers") {
    const long long n = parse_integer(key, value);
    if (n < 1 || n > 1'000'000)
      throw std::invalid_argument("config: key 'n_pursuers': value out of range");
    cfg.n_pursuers = static_cast<int>(n);
    cfg.pursuer_speeds = default_pursuer_speeds(cfg.n_pursuers);
  } else if (key == "pursuer_speeds") {
    cfg.pursuer_speeds = parse_real_list(key, value);
  } else if (key == "evader_speed") {
    cfg.evader_speed = parse_real(key, value);
  } else if (key == "t_f") {
    cfg.t_f = parse_real(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_real(key, value);
  } else if (key == "capture_radius") {
    cfg.capture_radius = parse_real(key, value);
  } else if (key == "pursuer_init_range") {
    cfg.pursuer_init_range = parse_interval(key, value);
  } else if (key == "evader_init_range") {
    cfg.evader_init_range = parse_interval(key, value);
  } else if (key == "tau_numerator") {
    cfg.tau_numerator = parse_real(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_seed(key, value);
  } else if (key == "mode") {
    cfg.mode = parse_mode_value(key, value);
  } else {
    return false;
  }
  return true;
}

}  // namespace detail
}  // namespace pegsim

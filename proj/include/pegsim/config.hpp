#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pegsim {

// Closed interval [lo, hi]; init positions are sampled per coordinate from one.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Mode { Centralized, Decentralized };

inline const char* to_string(Mode m) {
  return m == Mode::Centralized ? "CENTRALIZED" : "DECENTRALIZED";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  auto eq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      char ca = a[i], cb = b[i];
      if (ca >= 'a' && ca <= 'z') ca = static_cast<char>(ca - 'a' + 'A');
      if (cb >= 'a' && cb <= 'z') cb = static_cast<char>(cb - 'a' + 'A');
      if (ca != cb) return false;
    }
    return true;
  };
  if (eq(s, "CENTRALIZED")) return Mode::Centralized;
  if (eq(s, "DECENTRALIZED")) return Mode::Decentralized;
  return std::nullopt;
}

// Default pursuer speed profile: unit speed everywhere except the last
// pursuer, which is the fast one guaranteed to outrun the evader.
inline std::vector<double> default_pursuer_speeds(int n) {
  std::vector<double> v(static_cast<std::size_t>(n), 1.0);
  if (!v.empty()) v.back() = 2.0;
  return v;
}

struct GameConfig {
  int n_pursuers = 10;
  std::vector<double> pursuer_speeds = default_pursuer_speeds(10);
  double evader_speed = 0.9;
  double t_f = 30.0;
  double dt = 0.1;
  double capture_radius = 0.1;
  Interval pursuer_init_range{0.0, 20.0};
  Interval evader_init_range{8.0, 12.0};
  double tau_numerator = 10.0;
  std::uint64_t seed = 0;
  Mode mode = Mode::Decentralized;
};

// Throws std::invalid_argument naming the offending field.
inline void validate(const GameConfig& cfg) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (cfg.n_pursuers < 1) fail("n_pursuers: must be >= 1");
  if (cfg.pursuer_speeds.size() != static_cast<std::size_t>(cfg.n_pursuers))
    fail("pursuer_speeds: expected " + std::to_string(cfg.n_pursuers) + " entries, got " +
         std::to_string(cfg.pursuer_speeds.size()));
  for (double v : cfg.pursuer_speeds)
    if (!(v > 0.0)) fail("pursuer_speeds: all speeds must be > 0");
  if (!(cfg.evader_speed > 0.0)) fail("evader_speed: must be > 0");
  if (!(cfg.t_f > 0.0)) fail("t_f: must be > 0");
  if (!(cfg.dt > 0.0)) fail("dt: must be > 0");
  if (!(cfg.dt < cfg.t_f)) fail("dt: must be < t_f");
  if (!(cfg.capture_radius > 0.0)) fail("capture_radius: must be > 0");
  if (!(cfg.tau_numerator > 0.0)) fail("tau_numerator: must be > 0");
  if (!(cfg.pursuer_init_range.lo <= cfg.pursuer_init_range.hi))
    fail("pursuer_init_range: lo must be <= hi");
  if (!(cfg.evader_init_range.lo <= cfg.evader_init_range.hi))
    fail("evader_init_range: lo must be <= hi");
  bool super = false;
  for (double v : cfg.pursuer_speeds) super = super || v > cfg.evader_speed;
  if (!super) fail("pursuer_speeds: at least one pursuer must be faster than evader_speed");
}

}  // namespace pegsim

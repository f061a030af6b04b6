#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pegsim/capture.hpp"
#include "pegsim/config.hpp"
#include "pegsim/world.hpp"

namespace pegsim {

// Static view of the game at one instant: the world plus the capture-time
// estimate of every pursuer against the evader.
struct GameSnapshot {
  WorldState world;
  std::vector<double> capture_times;
  double t_f = 0.0;

  std::size_t n_pursuers() const { return capture_times.size(); }
};

inline GameSnapshot make_snapshot(const WorldState& world, const GameConfig& cfg) {
  GameSnapshot snap{world, {}, cfg.t_f};
  snap.capture_times.reserve(world.pursuer_pos.size());
  for (std::size_t i = 0; i < world.pursuer_pos.size(); ++i)
    snap.capture_times.push_back(capture_time(world.pursuer_pos[i], cfg.pursuer_speeds[i],
                                              world.evader_pos, cfg.evader_speed,
                                              cfg.capture_radius));
  return snap;
}

// Difference on extended reals. Infinities of the same sign subtract to 0,
// so a pursuer's marginal contribution to an already-infeasible coalition is
// zero rather than NaN; this keeps the potential identity well defined on
// every profile pair.
inline double ext_diff(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && std::signbit(a) == std::signbit(b)) return 0.0;
  return a - b;
}

// Reward for a capture at time t; negative past the horizon.
inline double nominal_reward(double t, double t_f) { return t_f - t; }

// Sum of capture times over the active pursuers; 0 for an empty active set,
// +infinity as soon as any active pursuer cannot capture.
inline double total_capture_time(const ActionProfile& profile, const GameSnapshot& snap) {
  double total = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (profile[i] == Action::Chase) total += snap.capture_times[i];
  return total;
}

namespace detail {

// Capture utility with one pursuer forced idle (pass npos to force none).
inline double capture_utility_excluding(const ActionProfile& profile, const GameSnapshot& snap,
                                        std::size_t excluded) {
  int active = 0;
  double total = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i == excluded || profile[i] != Action::Chase) continue;
    ++active;
    total += snap.capture_times[i];
  }
  if (active == 0) return 0.0;  // nobody assigned, nothing gained or spent
  if (std::isinf(total)) return -std::numeric_limits<double>::infinity();
  return nominal_reward(snap.world.t, snap.t_f) - total / active;
}

inline constexpr std::size_t kNoExclusion = static_cast<std::size_t>(-1);

}  // namespace detail

// Team utility of a joint assignment: nominal reward minus the average
// capture time of the active pursuers. Empty active set scores 0; an active
// pursuer with infinite capture time drives the utility to -infinity.
inline double capture_utility(const ActionProfile& profile, const GameSnapshot& snap) {
  return detail::capture_utility_excluding(profile, snap, detail::kNoExclusion);
}

// Wonderful-life utility of pursuer i: the team utility minus the team
// utility with i's action nulled out. Exactly 0 whenever i is idle.
inline double wlu(std::size_t i, const ActionProfile& profile, const GameSnapshot& snap) {
  if (profile[i] == Action::Idle) return 0.0;
  const double with_i = capture_utility(profile, snap);
  const double without_i = detail::capture_utility_excluding(profile, snap, i);
  return ext_diff(with_i, without_i);
}

// The potential of the assignment game is the team utility itself.
inline double potential(const ActionProfile& profile, const GameSnapshot& snap) {
  return capture_utility(profile, snap);
}

// Exhaustive pure-Nash enumeration over all 2^N profiles: a profile is kept
// when no single pursuer can strictly gain by flipping its own action.
// Guaranteed nonempty because the game admits an exact potential.
inline std::vector<ActionProfile> enumerate_nash(const GameSnapshot& snap) {
  const std::size_t n = snap.n_pursuers();
  if (n > 20) throw std::invalid_argument("enumerate_nash: more than 20 pursuers");

  std::vector<ActionProfile> result;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ActionProfile profile = ActionProfile::all_idle(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) profile.actions[i] = Action::Chase;

    bool nash = true;
    for (std::size_t i = 0; i < n && nash; ++i) {
      const Action other = profile[i] == Action::Chase ? Action::Idle : Action::Chase;
      nash = wlu(i, profile, snap) >= wlu(i, profile.with_action(i, other), snap);
    }
    if (nash) result.push_back(std::move(profile));
  }
  return result;
}

}  // namespace pegsim

#pragma once

#include <cstdint>
#include <vector>

#include "pegsim/vec2.hpp"

namespace pegsim {

struct WorldState {
  double t = 0.0;
  std::vector<Vec2> pursuer_pos;
  Vec2 evader_pos;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

enum class Action : std::uint8_t { Chase, Idle };

// Joint assignment of all pursuers. Chase = go after the evader,
// Idle = hold position.
struct ActionProfile {
  std::vector<Action> actions;

  std::size_t size() const { return actions.size(); }
  Action operator[](std::size_t i) const { return actions[i]; }

  int active_count() const {
    int n = 0;
    for (Action a : actions) n += (a == Action::Chase) ? 1 : 0;
    return n;
  }

  ActionProfile with_action(std::size_t i, Action a) const {
    ActionProfile out = *this;
    out.actions[i] = a;
    return out;
  }

  static ActionProfile all_idle(std::size_t n) {
    return ActionProfile{std::vector<Action>(n, Action::Idle)};
  }

  friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
};

}  // namespace pegsim

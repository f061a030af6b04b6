#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pegsim/config.hpp"
#include "pegsim/game.hpp"
#include "pegsim/learning.hpp"
#include "pegsim/rng.hpp"
#include "pegsim/strategies.hpp"
#include "pegsim/trace.hpp"
#include "pegsim/world.hpp"

namespace pegsim {

// Mutable simulation state threaded through one episode.
struct EngineState {
  WorldState world;
  ActionProfile profile;
  Rng rng;
  std::size_t step_index = 0;  // world.t stays pinned to step_index * dt
};

// Advances the world by one turn: the evader flees its closest pursuer
// first, then every chasing pursuer moves toward the evader's new position.
// Idle pursuers hold still. Precondition: no capture yet and t < t_f.
inline WorldState world_step(const WorldState& world, const ActionProfile& profile,
                             const GameConfig& cfg) {
  WorldState next = world;
  const Vec2 flee = evasion_direction(world.pursuer_pos, world.evader_pos);
  next.evader_pos += (cfg.evader_speed * cfg.dt) * flee;
  for (std::size_t i = 0; i < next.pursuer_pos.size(); ++i) {
    if (profile[i] != Action::Chase) continue;
    const Vec2 heading = pursuit_direction(next.pursuer_pos[i], next.evader_pos);
    next.pursuer_pos[i] += (cfg.pursuer_speeds[i] * cfg.dt) * heading;
  }
  next.t = world.t + cfg.dt;
  return next;
}

struct CaptureHit {
  int by = -1;
  double at = 0.0;
};

// Reports the lowest-index pursuer inside the closed ball of radius epsilon
// around the evader, or nothing if all pursuers are outside it.
inline std::optional<CaptureHit> check_capture(const WorldState& world, double epsilon) {
  for (std::size_t i = 0; i < world.pursuer_pos.size(); ++i)
    if (dist_sq(world.pursuer_pos[i], world.evader_pos) <= epsilon * epsilon)
      return CaptureHit{static_cast<int>(i), world.t};
  return std::nullopt;
}

// One round of the decentralized assignment. At step 0 every pursuer draws
// its action uniformly; afterwards a single uniformly chosen pursuer
// re-samples its action from the Boltzmann response while everyone else
// keeps the previous one. Draw order: step 0 makes one draw per pursuer in
// index order (0 maps to Chase); later steps draw the updater index, then
// the action sample.
inline ActionProfile dynamic_assignment_step(EngineState& state, const GameSnapshot& snap,
                                             const GameConfig& cfg) {
  const std::size_t n = snap.n_pursuers();
  if (state.step_index == 0) {
    ActionProfile profile = ActionProfile::all_idle(n);
    for (std::size_t i = 0; i < n; ++i)
      profile.actions[i] = state.rng.uniform_int(0, 1) == 0 ? Action::Chase : Action::Idle;
    return profile;
  }
  const std::size_t updater =
      static_cast<std::size_t>(state.rng.uniform_int(0, static_cast<int>(n) - 1));
  const double tau = TemperatureSchedule{cfg.tau_numerator}.at(state.step_index);
  const Action next = sap_update(updater, state.profile, snap, tau, state.rng);
  return state.profile.with_action(updater, next);
}

// Relay benchmark: activate only the pursuer with the smallest capture-time
// estimate, and only while that estimate still fits in the remaining
// horizon. Ties go to the lowest index.
inline ActionProfile centralized_assignment(const GameSnapshot& snap, const GameConfig& cfg) {
  const std::size_t n = snap.n_pursuers();
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (snap.capture_times[i] < snap.capture_times[best]) best = i;

  ActionProfile profile = ActionProfile::all_idle(n);
  const double remaining = cfg.t_f - snap.world.t;
  if (snap.capture_times[best] <= remaining) profile.actions[best] = Action::Chase;
  return profile;
}

namespace detail {

// Initial placement: pursuer coordinates are drawn first in index order
// (x then y), then the evader, re-drawn while it starts inside some
// pursuer's capture ball.
inline WorldState sample_initial_world(const GameConfig& cfg, Rng& rng) {
  WorldState world;
  world.t = 0.0;
  world.pursuer_pos.reserve(static_cast<std::size_t>(cfg.n_pursuers));
  for (int i = 0; i < cfg.n_pursuers; ++i)
    world.pursuer_pos.push_back(Vec2{rng.uniform(cfg.pursuer_init_range.lo, cfg.pursuer_init_range.hi),
                                     rng.uniform(cfg.pursuer_init_range.lo, cfg.pursuer_init_range.hi)});
  for (int attempt = 0; attempt < 10000; ++attempt) {
    world.evader_pos = Vec2{rng.uniform(cfg.evader_init_range.lo, cfg.evader_init_range.hi),
                            rng.uniform(cfg.evader_init_range.lo, cfg.evader_init_range.hi)};
    if (!check_capture(world, cfg.capture_radius)) return world;
  }
  throw std::runtime_error(
      "run_episode: could not place the evader outside every capture ball; "
      "the init ranges leave no room at this capture_radius");
}

}  // namespace detail

// Plays one full episode under the configured assignment mode and returns
// the step-by-step log. Deterministic in the config, including the seed.
inline EpisodeTrace run_episode(const GameConfig& cfg) {
  validate(cfg);

  EpisodeTrace trace;
  trace.config = cfg;

  EngineState state{WorldState{}, ActionProfile::all_idle(static_cast<std::size_t>(cfg.n_pursuers)),
                    make_rng(cfg.seed), 0};
  state.world = detail::sample_initial_world(cfg, state.rng);

  const auto record = [&trace](const EngineState& s, const GameSnapshot& snap) {
    StepRecord rec{s.world.t, s.world, s.profile, {}, potential(s.profile, snap)};
    rec.wlu.reserve(snap.n_pursuers());
    for (std::size_t i = 0; i < snap.n_pursuers(); ++i)
      rec.wlu.push_back(wlu(i, s.profile, snap));
    trace.records.push_back(std::move(rec));
  };

  // The loop leaves time k*dt only while k*dt is strictly inside the
  // horizon; the slack keeps 0.1+0.1+... rounding from adding a spurious
  // final step.
  const double slack = 1e-9 * std::max(1.0, cfg.t_f);
  std::optional<CaptureHit> hit;
  while (state.world.t < cfg.t_f - slack) {
    const GameSnapshot snap = make_snapshot(state.world, cfg);
    state.profile = cfg.mode == Mode::Centralized ? centralized_assignment(snap, cfg)
                                                  : dynamic_assignment_step(state, snap, cfg);
    record(state, snap);

    state.world = world_step(state.world, state.profile, cfg);
    state.step_index += 1;
    state.world.t = static_cast<double>(state.step_index) * cfg.dt;

    hit = check_capture(state.world, cfg.capture_radius);
    if (hit) break;
  }

  if (hit)
    trace.outcome = Outcome{Outcome::Kind::Captured, hit->by, hit->at};
  else
    trace.outcome = Outcome{Outcome::Kind::Timeout, -1, state.world.t};

  // Terminal row: final world with the last executed profile, utilities
  // recomputed at that world.
  record(state, make_snapshot(state.world, cfg));
  return trace;
}

// Per-pursuer chase time: dt for every executed step whose profile marked
// the pursuer Chase. The terminal record is a closing snapshot, not an
// executed step, and does not count.
inline std::vector<double> active_time_totals(const EpisodeTrace& trace, double dt) {
  const std::size_t n = trace.records.empty() ? 0 : trace.records.front().profile.size();
  std::vector<int> steps(n, 0);
  for (std::size_t k = 0; k + 1 < trace.records.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (trace.records[k].profile[i] == Action::Chase) steps[i] += 1;

  std::vector<double> totals(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) totals[i] = steps[i] * dt;
  return totals;
}

}  // namespace pegsim

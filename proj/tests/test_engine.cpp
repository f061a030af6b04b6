#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "pegsim/engine.hpp"
#include "pegsim/game.hpp"
#include "pegsim/trace_io.hpp"

using Catch::Matchers::WithinAbs;
using namespace pegsim;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Action C = Action::Chase;
constexpr Action I = Action::Idle;

GameConfig small_config(int n) {
  GameConfig cfg;
  cfg.n_pursuers = n;
  cfg.pursuer_speeds = default_pursuer_speeds(n);
  return cfg;
}

GameSnapshot snapshot_with(std::vector<double> times, double t = 0.0, double t_f = 30.0) {
  GameSnapshot snap;
  snap.world.t = t;
  snap.world.pursuer_pos.assign(times.size(), Vec2{});
  snap.capture_times = std::move(times);
  snap.t_f = t_f;
  return snap;
}

std::string exported(const EpisodeTrace& trace) {
  std::ostringstream out;
  export_trace(trace, out);
  return out.str();
}

}  // namespace

TEST_CASE("one world step moves the evader first, then the chasers") {
  GameConfig cfg = small_config(1);
  cfg.pursuer_speeds = {2.0};

  WorldState world;
  world.pursuer_pos = {Vec2{0.0, 0.0}};
  world.evader_pos = Vec2{1.0, 0.0};

  const ActionProfile chase{std::vector<Action>{C}};
  const WorldState next = world_step(world, chase, cfg);
  REQUIRE_THAT(next.evader_pos.x, WithinAbs(1.09, 1e-12));
  REQUIRE_THAT(next.evader_pos.y, WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(next.pursuer_pos[0].x, WithinAbs(0.2, 1e-12));
  REQUIRE_THAT(next.pursuer_pos[0].y, WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(next.t, WithinAbs(0.1, 1e-12));

  const ActionProfile idle{std::vector<Action>{I}};
  const WorldState still = world_step(world, idle, cfg);
  REQUIRE(still.pursuer_pos[0] == world.pursuer_pos[0]);
  REQUIRE_THAT(still.evader_pos.x, WithinAbs(1.09, 1e-12));
}

TEST_CASE("the evader breaks closest-pursuer ties toward the lower index") {
  GameConfig cfg = small_config(2);
  WorldState world;
  world.pursuer_pos = {Vec2{-2.0, 0.0}, Vec2{2.0, 0.0}};
  world.evader_pos = Vec2{0.0, 0.0};

  const WorldState next = world_step(world, ActionProfile::all_idle(2), cfg);
  REQUIRE_THAT(next.evader_pos.x, WithinAbs(0.09, 1e-12));
  REQUIRE_THAT(next.evader_pos.y, WithinAbs(0.0, 1e-12));
}

TEST_CASE("capture detection uses a closed ball and the lowest index") {
  WorldState world;
  world.t = 1.5;
  world.evader_pos = Vec2{0.05, 0.0};
  world.pursuer_pos = {Vec2{0.0, 0.0}};
  const auto hit = check_capture(world, 0.1);
  REQUIRE(hit.has_value());
  REQUIRE(hit->by == 0);
  REQUIRE(hit->at == 1.5);

  // Boundary: distance exactly epsilon counts.
  world.evader_pos = Vec2{0.1, 0.0};
  REQUIRE(check_capture(world, 0.1).has_value());

  world.evader_pos = Vec2{0.11, 0.0};
  REQUIRE_FALSE(check_capture(world, 0.1).has_value());

  world.pursuer_pos = {Vec2{5.0, 5.0}, Vec2{0.1, 0.0}, Vec2{0.12, 0.0}};
  world.evader_pos = Vec2{0.05, 0.0};
  REQUIRE(check_capture(world, 0.1)->by == 1);
}

TEST_CASE("the opening assignment is a per-pursuer coin flip") {
  const GameConfig cfg = small_config(3);
  const GameSnapshot snap = snapshot_with({5.0, 6.0, 7.0});

  std::vector<int> chase_counts(3, 0);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    EngineState state{snap.world, ActionProfile::all_idle(3), make_rng(seed), 0};
    const ActionProfile p = dynamic_assignment_step(state, snap, cfg);
    for (std::size_t i = 0; i < 3; ++i) chase_counts[i] += p[i] == C ? 1 : 0;
  }
  for (int count : chase_counts) {
    REQUIRE(count > 4800);
    REQUIRE(count < 5200);
  }
}

TEST_CASE("later assignment rounds change at most one pursuer") {
  const GameConfig cfg = small_config(4);
  const GameSnapshot snap = snapshot_with({5.0, 6.0, 7.0, kInf});

  Rng seeder = make_rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    ActionProfile prev = ActionProfile::all_idle(4);
    for (std::size_t i = 0; i < 4; ++i)
      prev.actions[i] = seeder.uniform_int(0, 1) == 0 ? C : I;

    EngineState state{snap.world, prev, make_rng(static_cast<std::uint64_t>(trial)),
                      static_cast<std::size_t>(1 + trial % 30)};
    const ActionProfile next = dynamic_assignment_step(state, snap, cfg);

    int hamming = 0;
    for (std::size_t i = 0; i < 4; ++i) hamming += next[i] != prev[i] ? 1 : 0;
    REQUIRE(hamming <= 1);
  }
}

TEST_CASE("relay assignment activates the quickest feasible pursuer only") {
  const GameConfig cfg = small_config(3);

  const GameSnapshot snap = snapshot_with({5.0, 10.0, kInf});
  ActionProfile p = centralized_assignment(snap, cfg);
  REQUIRE(p.actions == std::vector<Action>{C, I, I});

  const GameSnapshot none = snapshot_with({kInf, kInf, kInf});
  REQUIRE(centralized_assignment(none, cfg).active_count() == 0);

  const GameSnapshot tied = snapshot_with({5.0, 5.0}, 0.0, 30.0);
  GameConfig two = small_config(2);
  REQUIRE(centralized_assignment(tied, two).actions == std::vector<Action>{C, I});

  // Feasibility is judged against the remaining horizon, not the full one.
  const GameSnapshot late = snapshot_with({8.0, 12.0}, 25.0, 30.0);
  REQUIRE(centralized_assignment(late, two).active_count() == 0);
  const GameSnapshot just = snapshot_with({5.0, 12.0}, 25.0, 30.0);
  REQUIRE(centralized_assignment(just, two).actions == std::vector<Action>{C, I});
}

TEST_CASE("episodes are a pure function of their config") {
  GameConfig cfg = small_config(3);
  cfg.seed = 99;
  cfg.mode = Mode::Decentralized;
  cfg.t_f = 5.0;

  const EpisodeTrace a = run_episode(cfg);
  const EpisodeTrace b = run_episode(cfg);
  REQUIRE(exported(a) == exported(b));

  cfg.seed = 100;
  const EpisodeTrace c = run_episode(cfg);
  REQUIRE(exported(a) != exported(c));
}

TEST_CASE("an unreachable evader runs out the clock") {
  GameConfig cfg = small_config(1);
  cfg.pursuer_speeds = {2.0};
  cfg.pursuer_init_range = Interval{0.0, 0.0};
  cfg.evader_init_range = Interval{8.0, 8.0};
  cfg.t_f = 1.0;
  cfg.dt = 0.1;
  cfg.mode = Mode::Centralized;

  const EpisodeTrace trace = run_episode(cfg);
  REQUIRE_FALSE(trace.outcome.captured());
  REQUIRE(trace.outcome.at == 1.0);
  REQUIRE(trace.step_count() == 10);
  REQUIRE(trace.records.size() == 11);
}

TEST_CASE("a step size near the horizon bounds the loop to one step") {
  GameConfig cfg = small_config(1);
  cfg.pursuer_speeds = {2.0};
  cfg.pursuer_init_range = Interval{0.0, 0.0};
  cfg.evader_init_range = Interval{8.0, 8.0};
  cfg.t_f = 30.0;
  cfg.dt = 30.0 * (1.0 - 1e-10);
  cfg.mode = Mode::Decentralized;

  const EpisodeTrace trace = run_episode(cfg);
  REQUIRE_FALSE(trace.outcome.captured());
  REQUIRE(trace.step_count() == 1);
}

TEST_CASE("the centralized benchmark runs a single-chaser relay to capture") {
  GameConfig cfg;
  cfg.mode = Mode::Centralized;
  cfg.seed = 7;

  const EpisodeTrace trace = run_episode(cfg);
  REQUIRE(trace.outcome.captured());
  REQUIRE(trace.outcome.at <= cfg.t_f + cfg.dt);

  // Exactly one pursuer chases in every executed step, so summed active
  // time reproduces the capture time.
  for (std::size_t k = 0; k + 1 < trace.records.size(); ++k)
    REQUIRE(trace.records[k].profile.active_count() == 1);

  const std::vector<double> totals = active_time_totals(trace, cfg.dt);
  double sum = 0.0;
  for (double v : totals) sum += v;
  REQUIRE_THAT(sum, WithinAbs(trace.outcome.at, 1e-9));
}

TEST_CASE("trace rows advance by dt and respect speed limits") {
  for (const Mode mode : {Mode::Centralized, Mode::Decentralized}) {
    GameConfig cfg;
    cfg.mode = mode;
    cfg.seed = 13;
    cfg.t_f = 8.0;

    const EpisodeTrace trace = run_episode(cfg);
    REQUIRE(trace.records.size() >= 2);

    double max_speed = cfg.evader_speed;
    for (double v : cfg.pursuer_speeds) max_speed = std::max(max_speed, v);

    for (std::size_t k = 0; k < trace.records.size(); ++k) {
      const StepRecord& rec = trace.records[k];
      REQUIRE(rec.t == rec.world.t);
      REQUIRE(rec.t <= cfg.t_f + cfg.dt);
      if (k > 0) {
        REQUIRE_THAT(rec.t - trace.records[k - 1].t, WithinAbs(cfg.dt, 1e-9));
        const WorldState& prev = trace.records[k - 1].world;
        for (std::size_t i = 0; i < rec.world.pursuer_pos.size(); ++i)
          REQUIRE(dist(prev.pursuer_pos[i], rec.world.pursuer_pos[i]) <=
                  max_speed * cfg.dt + 1e-12);
        REQUIRE(dist(prev.evader_pos, rec.world.evader_pos) <= max_speed * cfg.dt + 1e-12);
      }

      // Recorded utilities must be reproducible from the recorded state.
      const GameSnapshot snap = make_snapshot(rec.world, cfg);
      REQUIRE(rec.potential == potential(rec.profile, snap));
      for (std::size_t i = 0; i < rec.wlu.size(); ++i)
        REQUIRE(rec.wlu[i] == wlu(i, rec.profile, snap));
    }
  }
}

TEST_CASE("active time totals count chase steps per pursuer") {
  EpisodeTrace trace;
  trace.config = small_config(2);
  for (int k = 0; k < 47; ++k) {
    StepRecord rec;
    rec.t = 0.1 * k;
    rec.world.t = rec.t;
    rec.world.pursuer_pos = {Vec2{0.0, 0.0}, Vec2{5.0, 5.0}};
    rec.world.evader_pos = Vec2{1.0, 1.0};
    // 46 executed steps of CHASE for pursuer 0; the 47th record is the
    // terminal row and must not count.
    rec.profile = ActionProfile{std::vector<Action>{C, I}};
    rec.wlu = {0.0, 0.0};
    trace.records.push_back(rec);
  }

  const std::vector<double> totals = active_time_totals(trace, 0.1);
  REQUIRE(totals.size() == 2);
  REQUIRE_THAT(totals[0], WithinAbs(4.6, 1e-9));
  REQUIRE(totals[1] == 0.0);
}

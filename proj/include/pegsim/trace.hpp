#pragma once

#include <vector>

#include "pegsim/config.hpp"
#include "pegsim/world.hpp"

namespace pegsim {

// One row of an episode log: the world at time t, the profile in force for
// the step leaving t, and the per-pursuer marginal utilities plus the
// potential evaluated for that (world, profile) pair.
struct StepRecord {
  double t = 0.0;
  WorldState world;
  ActionProfile profile;
  std::vector<double> wlu;
  double potential = 0.0;
};

struct Outcome {
  enum class Kind { Captured, Timeout };
  Kind kind = Kind::Timeout;
  int by = -1;      // capturing pursuer, Captured only
  double at = 0.0;  // capture time, Captured only

  bool captured() const { return kind == Kind::Captured; }
};

// Full episode log. Records run from t = 0 to the terminal time in steps of
// dt; the terminal record repeats the last executed profile with utilities
// recomputed at the final world.
struct EpisodeTrace {
  GameConfig config;
  std::vector<StepRecord> records;
  Outcome outcome;

  // Number of executed simulation steps (the terminal record closes the
  // episode and is not followed by a step).
  std::size_t step_count() const { return records.empty() ? 0 : records.size() - 1; }
};

}  // namespace pegsim

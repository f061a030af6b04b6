#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "pegsim/game.hpp"
#include "pegsim/rng.hpp"
#include "pegsim/world.hpp"

namespace pegsim {

// Cooling schedule for the action sampler: tau(k) = numerator / k^2 over
// update steps k >= 1. Step 0 never consults the schedule because the first
// joint assignment is drawn uniformly.
struct TemperatureSchedule {
  double numerator = 10.0;

  double at(std::size_t step) const {
    if (step == 0) throw std::invalid_argument("TemperatureSchedule: step must be >= 1");
    const double s = static_cast<double>(step);
    return numerator / (s * s);
  }
};

// Boltzmann distribution over scores at temperature tau. Scores of -infinity
// receive probability exactly 0; the max score is subtracted before
// exponentiation so large magnitudes cannot overflow.
inline std::vector<double> softmax(std::span<const double> scores, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("softmax: tau must be positive");
  if (scores.empty()) throw std::invalid_argument("softmax: empty score list");

  double best = -std::numeric_limits<double>::infinity();
  for (double s : scores) best = std::max(best, s);
  if (std::isinf(best) && best < 0.0)
    throw std::invalid_argument("softmax: all scores are -infinity");

  std::vector<double> prob(scores.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double p = std::isinf(scores[i]) ? 0.0 : std::exp((scores[i] - best) / tau);
    prob[i] = p;
    sum += p;
  }
  for (double& p : prob) p /= sum;
  return prob;
}

// One asynchronous learning update: pursuer i keeps everyone else's action
// fixed, scores its own two candidate actions by hypothetical
// wonderful-life utility, and samples the next action from the Boltzmann
// distribution over those scores.
inline Action sap_update(std::size_t i, const ActionProfile& profile, const GameSnapshot& snap,
                         double tau, Rng& rng) {
  const Action candidates[2] = {Action::Chase, Action::Idle};
  double scores[2];
  for (std::size_t k = 0; k < 2; ++k)
    scores[k] = wlu(i, profile.with_action(i, candidates[k]), snap);

  const std::vector<double> prob = softmax(std::span<const double>(scores, 2), tau);
  return candidates[rng.categorical(prob)];
}

}  // namespace pegsim

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "pegsim/vec2.hpp"

namespace pegsim {

// Pure pursuit: unit vector from the pursuer straight at the evader, or the
// zero vector if the two coincide.
inline Vec2 pursuit_direction(Vec2 pursuer_pos, Vec2 evader_pos) {
  return normalize(evader_pos - pursuer_pos);
}

// Index of the pursuer nearest the evader; ties go to the lowest index.
inline std::size_t closest_pursuer(std::span<const Vec2> pursuer_pos, Vec2 evader_pos) {
  if (pursuer_pos.empty()) throw std::invalid_argument("closest_pursuer: no pursuers");
  std::size_t best = 0;
  double best_d2 = dist_sq(pursuer_pos[0], evader_pos);
  for (std::size_t i = 1; i < pursuer_pos.size(); ++i) {
    const double d2 = dist_sq(pursuer_pos[i], evader_pos);
    if (d2 < best_d2) {
      best = i;
      best_d2 = d2;
    }
  }
  return best;
}

// Pure evasion: unit vector straight away from the closest pursuer, whether
// or not that pursuer is chasing. Coincidence with the closest pursuer is a
// degenerate capture and cannot arise while the capture radius is positive.
inline Vec2 evasion_direction(std::span<const Vec2> pursuer_pos, Vec2 evader_pos) {
  const std::size_t k = closest_pursuer(pursuer_pos, evader_pos);
  const Vec2 away = evader_pos - pursuer_pos[k];
  if (norm_sq(away) == 0.0)
    throw std::domain_error("evasion_direction: evader coincides with closest pursuer");
  return normalize(away);
}

}  // namespace pegsim

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pegsim/vec2.hpp"

namespace pegsim {

inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

// Estimated time for a pursuer to capture the evader, assuming the pursuer
// plays pure pursuit and the evader flees straight away from *this* pursuer.
// Under that assumption the chase is collinear and the capture time is the
// smallest positive root of
//
//   (v_e^2 - v_i^2) phi^2 + 2(<xi, v_e u_e> - eps v_i) phi + |xi|^2 - eps^2 = 0
//
// with xi = evader - pursuer and u_e = xi / |xi|. Returns 0 when the evader
// is already inside the capture ball and +infinity when no positive root
// exists (the pursuer can never close the gap). When the evader is in fact
// fleeing from a different pursuer the value is an upper bound on the true
// capture time, not the exact value.
inline double capture_time(Vec2 pursuer_pos, double pursuer_speed, Vec2 evader_pos,
                           double evader_speed, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("capture_time: epsilon must be > 0");
  if (!(pursuer_speed > 0.0) || !(evader_speed > 0.0))
    throw std::invalid_argument("capture_time: speeds must be > 0");

  const Vec2 xi = evader_pos - pursuer_pos;
  const double d = norm(xi);
  if (d <= epsilon) return 0.0;

  const Vec2 flee = normalize(xi);
  const double a = evader_speed * evader_speed - pursuer_speed * pursuer_speed;
  const double b = 2.0 * (dot(xi, evader_speed * flee) - epsilon * pursuer_speed);
  const double c = d * d - epsilon * epsilon;

  auto positive_or_infinite = [](double r) { return r > 0.0 ? r : kInfiniteTime; };

  if (a == 0.0) {
    // Equal speeds: the quadratic degenerates to b phi + c = 0.
    if (b == 0.0) return kInfiniteTime;
    return positive_or_infinite(-c / b);
  }

  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return kInfiniteTime;

  // Larger-magnitude root first, companion root from the product, which keeps
  // the small root accurate when b dominates.
  const double sq = std::sqrt(disc);
  const double q = (b >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
  double r1 = q / a;
  double r2 = (q == 0.0) ? 0.0 : c / q;

  const double lo = std::min(r1, r2);
  const double hi = std::max(r1, r2);
  if (lo > 0.0) return lo;
  return positive_or_infinite(hi);
}

}  // namespace pegsim

#pragma once

#include <cmath>

namespace pegsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }

inline double norm(Vec2 v) { return std::sqrt(norm_sq(v)); }

inline double dist_sq(Vec2 a, Vec2 b) { return norm_sq(b - a); }

inline double dist(Vec2 a, Vec2 b) { return norm(b - a); }

// Unit vector along v; the zero vector maps to itself.
inline Vec2 normalize(Vec2 v) {
  const double n = norm(v);
  if (n == 0.0) return {0.0, 0.0};
  return {v.x / n, v.y / n};
}

}  // namespace pegsim

#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pegsim/trace.hpp"
#include "pegsim/vec2.hpp"

namespace pegsim {
namespace detail {

// Two decimals is below visual resolution and keeps the file bytes a pure
// function of the trace.
inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct SvgMap {
  double min_x = 0.0, max_y = 0.0, scale = 1.0, margin = 24.0;

  // World to pixel, with the y axis flipped so north stays up.
  double px(double x) const { return (x - min_x) * scale + margin; }
  double py(double y) const { return (max_y - y) * scale + margin; }
};

inline std::string svg_path(const std::vector<Vec2>& pts, const SvgMap& m,
                            const std::string& stroke) {
  std::string d = "M " + svg_num(m.px(pts.front().x)) + " " + svg_num(m.py(pts.front().y));
  bool moved = false;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (pts[k] == pts[k - 1]) continue;
    d += " L " + svg_num(m.px(pts[k].x)) + " " + svg_num(m.py(pts[k].y));
    moved = true;
  }
  // A stationary player still gets a visible dot: a zero-length segment
  // with a round cap.
  if (!moved) d += " L " + svg_num(m.px(pts.front().x)) + " " + svg_num(m.py(pts.front().y));
  return "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
         "\" stroke-width=\"1.5\" stroke-linecap=\"round\"/>\n";
}

}  // namespace detail

// Draws every pursuer's trajectory, the evader's trajectory, start markers
// (pursuers as blue circles, the fastest pursuer in yellow, the evader as a
// red diamond), and a capture ring at the evader's final position when the
// episode ended in a capture. Standalone SVG, equal scale on both axes.
inline void render_trajectories(const EpisodeTrace& trace, std::ostream& out) {
  if (trace.records.empty()) throw std::invalid_argument("plot: no records to draw");

  const std::size_t n = trace.records.front().world.pursuer_pos.size();

  double min_x = trace.records.front().world.evader_pos.x;
  double max_x = min_x;
  double min_y = trace.records.front().world.evader_pos.y;
  double max_y = min_y;
  const auto grow = [&](const Vec2& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const StepRecord& rec : trace.records) {
    grow(rec.world.evader_pos);
    for (const Vec2& p : rec.world.pursuer_pos) grow(p);
  }

  detail::SvgMap m;
  m.min_x = min_x;
  m.max_y = max_y;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  m.scale = 752.0 / span;
  const double width = (max_x - min_x) * m.scale + 2 * m.margin;
  const double height = (max_y - min_y) * m.scale + 2 * m.margin;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::svg_num(width)
      << "\" height=\"" << detail::svg_num(height) << "\" viewBox=\"0 0 "
      << detail::svg_num(width) << " " << detail::svg_num(height) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::vector<Vec2> pts(trace.records.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < trace.records.size(); ++k)
      pts[k] = trace.records[k].world.pursuer_pos[i];
    out << detail::svg_path(pts, m, "#1f77b4");
  }
  for (std::size_t k = 0; k < trace.records.size(); ++k)
    pts[k] = trace.records[k].world.evader_pos;
  out << detail::svg_path(pts, m, "#d62728");

  const std::size_t super_i = static_cast<std::size_t>(
      std::max_element(trace.config.pursuer_speeds.begin(), trace.config.pursuer_speeds.end()) -
      trace.config.pursuer_speeds.begin());
  const WorldState& start = trace.records.front().world;
  for (std::size_t i = 0; i < n; ++i)
    out << "  <circle cx=\"" << detail::svg_num(m.px(start.pursuer_pos[i].x)) << "\" cy=\""
        << detail::svg_num(m.py(start.pursuer_pos[i].y)) << "\" r=\"4\" fill=\""
        << (i == super_i ? "#ffd700" : "#1f77b4") << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";

  const double ex = m.px(start.evader_pos.x);
  const double ey = m.py(start.evader_pos.y);
  out << "  <polygon points=\"" << detail::svg_num(ex) << "," << detail::svg_num(ey - 5.0) << " "
      << detail::svg_num(ex + 5.0) << "," << detail::svg_num(ey) << " " << detail::svg_num(ex)
      << "," << detail::svg_num(ey + 5.0) << " " << detail::svg_num(ex - 5.0) << ","
      << detail::svg_num(ey) << "\" fill=\"#d62728\" stroke=\"black\" stroke-width=\"0.5\"/>\n";

  if (trace.outcome.captured()) {
    const Vec2 fin = trace.records.back().world.evader_pos;
    const double r = std::max(3.0, trace.config.capture_radius * m.scale);
    out << "  <circle id=\"capture\" cx=\"" << detail::svg_num(m.px(fin.x)) << "\" cy=\""
        << detail::svg_num(m.py(fin.y)) << "\" r=\"" << detail::svg_num(r)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
}

inline void render_trajectories(const EpisodeTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("plot: cannot write '" + path + "'");
  render_trajectories(trace, out);
  out.close();
  if (!out) throw std::runtime_error("plot: write failed for '" + path + "'");
}

}  // namespace pegsim

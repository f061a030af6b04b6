#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pegsim/config.hpp"
#include "pegsim/format.hpp"
#include "pegsim/kv.hpp"
#include "pegsim/trace.hpp"
#include "pegsim/world.hpp"

namespace pegsim {
namespace detail {

inline std::string trace_header(int n_pursuers) {
  std::string h = "step,t";
  for (int i = 0; i < n_pursuers; ++i)
    h += ",p" + std::to_string(i) + "_x,p" + std::to_string(i) + "_y";
  h += ",e_x,e_y";
  for (int i = 0; i < n_pursuers; ++i) h += ",a" + std::to_string(i);
  for (int i = 0; i < n_pursuers; ++i) h += ",wlu" + std::to_string(i);
  h += ",potential";
  return h;
}

inline void write_config_comments(std::ostream& out, const GameConfig& cfg) {
  out << "# n_pursuers=" << cfg.n_pursuers << "\n";
  out << "# pursuer_speeds=";
  for (std::size_t i = 0; i < cfg.pursuer_speeds.size(); ++i)
    out << (i ? "," : "") << format_double(cfg.pursuer_speeds[i]);
  out << "\n";
  out << "# evader_speed=" << format_double(cfg.evader_speed) << "\n";
  out << "# t_f=" << format_double(cfg.t_f) << "\n";
  out << "# dt=" << format_double(cfg.dt) << "\n";
  out << "# capture_radius=" << format_double(cfg.capture_radius) << "\n";
  out << "# pursuer_init_range=" << format_double(cfg.pursuer_init_range.lo) << ","
      << format_double(cfg.pursuer_init_range.hi) << "\n";
  out << "# evader_init_range=" << format_double(cfg.evader_init_range.lo) << ","
      << format_double(cfg.evader_init_range.hi) << "\n";
  out << "# tau_numerator=" << format_double(cfg.tau_numerator) << "\n";
  out << "# seed=" << cfg.seed << "\n";
  out << "# mode=" << to_string(cfg.mode) << "\n";
}

}  // namespace detail

// Writes a full episode log as comma-separated text: a comment block
// echoing the config as key=value pairs, a header row, one row per record,
// and a closing outcome row. Doubles use the shortest round-trip form, so
// the bytes are a pure function of the trace.
inline void export_trace(const EpisodeTrace& trace, std::ostream& out) {
  if (trace.records.empty()) throw std::invalid_argument("trace: no records to export");

  const int n = trace.config.n_pursuers;
  detail::write_config_comments(out, trace.config);
  out << detail::trace_header(n) << "\n";

  for (std::size_t k = 0; k < trace.records.size(); ++k) {
    const StepRecord& rec = trace.records[k];
    out << k << ',' << format_double(rec.t);
    for (const Vec2& p : rec.world.pursuer_pos)
      out << ',' << format_double(p.x) << ',' << format_double(p.y);
    out << ',' << format_double(rec.world.evader_pos.x) << ','
        << format_double(rec.world.evader_pos.y);
    for (std::size_t i = 0; i < rec.profile.size(); ++i)
      out << ',' << (rec.profile[i] == Action::Chase ? "CHASE" : "IDLE");
    for (double w : rec.wlu) out << ',' << format_double(w);
    out << ',' << format_double(rec.potential) << "\n";
  }

  if (trace.outcome.captured())
    out << "outcome,CAPTURED," << trace.outcome.by << ',' << format_double(trace.outcome.at)
        << "\n";
  else
    out << "outcome,TIMEOUT,,\n";
}

inline void export_trace(const EpisodeTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("trace: cannot write '" + path + "'");
  export_trace(trace, out);
  out.close();
  if (!out) throw std::runtime_error("trace: write failed for '" + path + "'");
}

// Reads a file written by export_trace back into an EpisodeTrace. The
// config comment block is required; it is what makes a trace file
// self-describing.
inline EpisodeTrace import_trace(std::istream& in, const std::string& where) {
  const auto fail = [&where](const std::string& msg) -> std::runtime_error {
    return std::runtime_error("trace: " + where + ": " + msg);
  };

  std::map<std::string, std::string> kv;
  std::string line;
  std::string header;
  while (std::getline(in, line)) {
    std::string_view s = detail::trim(line);
    if (s.empty()) continue;
    if (s.front() != '#') {
      header = std::string(s);
      break;
    }
    s.remove_prefix(1);
    s = detail::trim(s);
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) throw fail("comment line is not '# key=value'");
    const std::string key{detail::trim(s.substr(0, eq))};
    kv[key] = std::string(detail::trim(s.substr(eq + 1)));
  }
  if (header.empty()) throw fail("missing header row");

  EpisodeTrace trace;
  if (const auto it = kv.find("n_pursuers"); it != kv.end()) {
    detail::apply_game_config_key(trace.config, it->first, it->second);
    kv.erase(it);
  }
  for (const auto& [key, value] : kv)
    if (!detail::apply_game_config_key(trace.config, key, value))
      throw fail("unknown config key '" + key + "'");

  const int n = trace.config.n_pursuers;
  if (header != detail::trace_header(n)) throw fail("header row does not match the config");
  const std::size_t n_cols = 2 + 2 * static_cast<std::size_t>(n) + 2 +
                             2 * static_cast<std::size_t>(n) + 1;

  bool saw_outcome = false;
  while (std::getline(in, line)) {
    const std::string_view s = detail::trim(line);
    if (s.empty()) continue;
    const std::vector<std::string> cols = detail::split_list(s);

    if (!cols.empty() && cols[0] == "outcome") {
      if (cols.size() != 4) throw fail("outcome row must have 4 fields");
      if (cols[1] == "CAPTURED") {
        trace.outcome.kind = Outcome::Kind::Captured;
        trace.outcome.by = static_cast<int>(detail::parse_integer("outcome", cols[2]));
        trace.outcome.at = detail::parse_extended_real("outcome", cols[3]);
      } else if (cols[1] == "TIMEOUT") {
        trace.outcome.kind = Outcome::Kind::Timeout;
        trace.outcome.by = -1;
        trace.outcome.at = trace.records.empty() ? 0.0 : trace.records.back().t;
      } else {
        throw fail("unknown outcome '" + cols[1] + "'");
      }
      saw_outcome = true;
      break;
    }

    if (cols.size() != n_cols)
      throw fail("row has " + std::to_string(cols.size()) + " fields, expected " +
                 std::to_string(n_cols));

    StepRecord rec;
    std::size_t c = 1;  // cols[0] is the step index, redundant with the row order
    rec.t = detail::parse_extended_real("t", cols[c++]);
    rec.world.t = rec.t;
    for (int i = 0; i < n; ++i) {
      const double x = detail::parse_extended_real("p_x", cols[c++]);
      const double y = detail::parse_extended_real("p_y", cols[c++]);
      rec.world.pursuer_pos.push_back(Vec2{x, y});
    }
    rec.world.evader_pos.x = detail::parse_extended_real("e_x", cols[c++]);
    rec.world.evader_pos.y = detail::parse_extended_real("e_y", cols[c++]);
    rec.profile = ActionProfile::all_idle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const std::string& a = cols[c++];
      if (a == "CHASE")
        rec.profile.actions[static_cast<std::size_t>(i)] = Action::Chase;
      else if (a != "IDLE")
        throw fail("unknown action '" + a + "'");
    }
    for (int i = 0; i < n; ++i)
      rec.wlu.push_back(detail::parse_extended_real("wlu", cols[c++]));
    rec.potential = detail::parse_extended_real("potential", cols[c++]);
    trace.records.push_back(std::move(rec));
  }

  if (!saw_outcome) throw fail("missing outcome row");
  if (trace.records.empty()) throw fail("no data rows");
  return trace;
}

inline EpisodeTrace import_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("trace: cannot open '" + path + "'");
  return import_trace(in, path);
}

}  // namespace pegsim

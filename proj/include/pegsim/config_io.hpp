#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pegsim/config.hpp"
#include "pegsim/experiment.hpp"
#include "pegsim/kv.hpp"

namespace pegsim {

// Parses an experiment description from flat key=value text. Keys are the
// GameConfig and ExperimentSpec field names; '#' starts a comment; list
// values are comma-separated; a repeated key keeps its last value. Every
// omitted key falls back to the built-in default scenario.
inline ExperimentSpec parse_config_text(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s = line;
    if (const std::size_t hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config: line '" + std::string(s) + "' is not key=value");
    const std::string key{detail::trim(s.substr(0, eq))};
    if (key.empty())
      throw std::invalid_argument("config: empty key in line '" + std::string(s) + "'");
    kv[key] = std::string(detail::trim(s.substr(eq + 1)));
  }

  ExperimentSpec spec;

  // n_pursuers first so the speed default matches it no matter where the
  // key sat in the file.
  if (const auto it = kv.find("n_pursuers"); it != kv.end()) {
    detail::apply_game_config_key(spec.base, it->first, it->second);
    kv.erase(it);
  }

  for (const auto& [key, value] : kv) {
    if (detail::apply_game_config_key(spec.base, key, value)) continue;
    if (key == "modes") {
      spec.modes.clear();
      for (const std::string& piece : detail::split_list(value))
        spec.modes.push_back(detail::parse_mode_value(key, piece));
    } else if (key == "dt_grid") {
      spec.dt_grid = detail::parse_real_list(key, value);
    } else if (key == "n_runs") {
      const long long n = detail::parse_integer(key, value);
      if (n < 1 || n > 1'000'000)
        throw std::invalid_argument("config: key 'n_runs': must be at least 1");
      spec.n_runs = static_cast<int>(n);
    } else if (key == "master_seed") {
      spec.master_seed = detail::parse_seed(key, value);
    } else if (key == "output_dir") {
      if (value.empty()) throw std::invalid_argument("config: key 'output_dir': empty path");
      spec.output_dir = value;
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  validate(spec);
  return spec;
}

inline ExperimentSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  return parse_config_text(in);
}

}  // namespace pegsim

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pegsim/config.hpp"
#include "pegsim/engine.hpp"
#include "pegsim/format.hpp"
#include "pegsim/trace.hpp"
#include "pegsim/trace_io.hpp"

namespace pegsim {

// A full Monte Carlo study: the shared scenario plus the grid of
// (mode, step size) cells, each run n_runs times.
struct ExperimentSpec {
  GameConfig base;
  std::vector<Mode> modes{Mode::Centralized, Mode::Decentralized};
  std::vector<double> dt_grid{0.1, 0.01, 0.001};
  int n_runs = 100;
  std::uint64_t master_seed = 0;
  std::string output_dir = "out";
};

inline void validate(const ExperimentSpec& spec) {
  if (spec.n_runs < 1) throw std::invalid_argument("n_runs must be at least 1");
  if (spec.modes.empty()) throw std::invalid_argument("modes must not be empty");
  if (spec.dt_grid.empty()) throw std::invalid_argument("dt_grid must not be empty");
  if (spec.output_dir.empty()) throw std::invalid_argument("output_dir must not be empty");
  for (double dt : spec.dt_grid) {
    GameConfig cell = spec.base;
    cell.dt = dt;
    validate(cell);
  }
}

// Aggregates for one (mode, dt) cell. The time means are conditioned on the
// captured runs, matching a per-capture reading of the benchmark table;
// they are NaN when the cell captures nothing.
struct CellStats {
  Mode mode = Mode::Decentralized;
  double dt = 0.0;
  int n_runs = 0;
  int n_captured = 0;
  double mean_total_active_time = std::numeric_limits<double>::quiet_NaN();
  double mean_capture_time = std::numeric_limits<double>::quiet_NaN();
  double capture_rate = 0.0;
  std::vector<double> mean_active_time_per_pursuer;
};

struct AggregateReport {
  std::vector<CellStats> cells;
};

using RunSink = std::function<void(int run_index, const EpisodeTrace& trace)>;

// Runs one cell: n_runs episodes with per-run seed master_seed + run index,
// so every cell sees the same initial configurations and modes can be
// compared pairwise. The sink, when given, receives every finished trace.
inline CellStats run_cell(const GameConfig& base, Mode mode, double dt, int n_runs,
                          std::uint64_t master_seed, const RunSink& sink = {}) {
  CellStats stats;
  stats.mode = mode;
  stats.dt = dt;
  stats.n_runs = n_runs;
  stats.mean_active_time_per_pursuer.assign(static_cast<std::size_t>(base.n_pursuers), 0.0);

  double sum_total_active = 0.0;
  double sum_capture_time = 0.0;
  std::vector<double> sum_per_pursuer(static_cast<std::size_t>(base.n_pursuers), 0.0);

  for (int run = 0; run < n_runs; ++run) {
    GameConfig cfg = base;
    cfg.mode = mode;
    cfg.dt = dt;
    cfg.seed = master_seed + static_cast<std::uint64_t>(run);

    EpisodeTrace trace;
    try {
      trace = run_episode(cfg);
    } catch (const std::exception& e) {
      throw std::runtime_error("experiment: run " + std::to_string(run) + " (mode=" +
                               to_string(mode) + ", dt=" + format_double(dt) + "): " + e.what());
    }

    if (trace.outcome.captured()) {
      const std::vector<double> totals = active_time_totals(trace, dt);
      stats.n_captured += 1;
      sum_capture_time += trace.outcome.at;
      for (std::size_t i = 0; i < totals.size(); ++i) {
        sum_total_active += totals[i];
        sum_per_pursuer[i] += totals[i];
      }
    }
    if (sink) sink(run, trace);
  }

  stats.capture_rate = n_runs > 0 ? static_cast<double>(stats.n_captured) / n_runs : 0.0;
  if (stats.n_captured > 0) {
    stats.mean_total_active_time = sum_total_active / stats.n_captured;
    stats.mean_capture_time = sum_capture_time / stats.n_captured;
    for (std::size_t i = 0; i < sum_per_pursuer.size(); ++i)
      stats.mean_active_time_per_pursuer[i] = sum_per_pursuer[i] / stats.n_captured;
  } else {
    stats.mean_active_time_per_pursuer.assign(sum_per_pursuer.size(),
                                              std::numeric_limits<double>::quiet_NaN());
  }
  return stats;
}

namespace detail {

inline std::string mode_file_tag(Mode mode) {
  return mode == Mode::Centralized ? "centralized" : "decentralized";
}

}  // namespace detail

// Runs the whole grid and writes everything under spec.output_dir:
// report.csv (one row per cell), runs.csv (one row per episode with the
// per-pursuer active-time breakdown), and trace_<mode>_<dt>_<run>.csv files.
inline AggregateReport run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  const std::filesystem::path dir(spec.output_dir);
  std::filesystem::create_directories(dir);

  std::ofstream runs(dir / "runs.csv");
  if (!runs) throw std::runtime_error("experiment: cannot write " + (dir / "runs.csv").string());
  runs << "mode,dt,run,seed,outcome,captured_by,capture_time,total_active_time";
  for (int i = 0; i < spec.base.n_pursuers; ++i) runs << ",p" << i << "_active_time";
  runs << "\n";

  AggregateReport report;
  for (Mode mode : spec.modes) {
    for (double dt : spec.dt_grid) {
      const RunSink sink = [&](int run, const EpisodeTrace& trace) {
        const std::string name = "trace_" + detail::mode_file_tag(mode) + "_" +
                                 format_double(dt) + "_" + std::to_string(run) + ".csv";
        export_trace(trace, (dir / name).string());

        const std::vector<double> totals = active_time_totals(trace, dt);
        double total = 0.0;
        for (double v : totals) total += v;
        runs << to_string(mode) << ',' << format_double(dt) << ',' << run << ','
             << trace.config.seed << ','
             << (trace.outcome.captured() ? "CAPTURED" : "TIMEOUT") << ','
             << (trace.outcome.captured() ? std::to_string(trace.outcome.by) : std::string()) << ','
             << (trace.outcome.captured() ? format_double(trace.outcome.at) : std::string()) << ','
             << format_double(total);
        for (double v : totals) runs << ',' << format_double(v);
        runs << "\n";
      };
      report.cells.push_back(
          run_cell(spec.base, mode, dt, spec.n_runs, spec.master_seed, sink));
    }
  }
  runs.close();

  std::ofstream out(dir / "report.csv");
  if (!out) throw std::runtime_error("experiment: cannot write " + (dir / "report.csv").string());
  out << "mode,dt,n_runs,mean_total_active_time,mean_capture_time,capture_rate\n";
  for (const CellStats& cell : report.cells)
    out << to_string(cell.mode) << ',' << format_double(cell.dt) << ',' << cell.n_runs << ','
        << format_double(cell.mean_total_active_time) << ','
        << format_double(cell.mean_capture_time) << ',' << format_double(cell.capture_rate)
        << "\n";
  return report;
}

}  // namespace pegsim

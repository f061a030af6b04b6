// Command-line front end: single episodes, Monte Carlo experiments, and
// trajectory plots. Exit codes: 0 success, 1 usage or config error,
// 2 runtime failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pegsim/pegsim.hpp"

namespace {

void print_outcome(const pegsim::EpisodeTrace& trace) {
  if (trace.outcome.captured())
    std::cout << "CAPTURED by pursuer " << trace.outcome.by << " at t="
              << pegsim::format_double(trace.outcome.at) << " (" << trace.step_count()
              << " steps)\n";
  else
    std::cout << "TIMEOUT at t=" << pegsim::format_double(trace.outcome.at) << " ("
              << trace.step_count() << " steps)\n";
}

int run_single(const std::string& config_path, const std::string& mode_str, double dt,
               std::uint64_t seed, bool seed_given, const std::string& out_path) {
  pegsim::GameConfig cfg;
  if (!config_path.empty()) cfg = pegsim::load_config(config_path).base;
  if (!mode_str.empty()) {
    const auto mode = pegsim::parse_mode(mode_str);
    if (!mode) throw std::invalid_argument("--mode: expected CENTRALIZED or DECENTRALIZED");
    cfg.mode = *mode;
  }
  if (dt > 0.0) cfg.dt = dt;
  if (seed_given) cfg.seed = seed;

  const pegsim::EpisodeTrace trace = pegsim::run_episode(cfg);
  pegsim::export_trace(trace, out_path);
  print_outcome(trace);
  std::cout << "trace written to " << out_path << "\n";
  return 0;
}

int run_experiment_cmd(const std::string& config_path) {
  const pegsim::ExperimentSpec spec = pegsim::load_config(config_path);
  const pegsim::AggregateReport report = pegsim::run_experiment(spec);
  std::cout << "mode,dt,n_runs,mean_total_active_time,mean_capture_time,capture_rate\n";
  for (const pegsim::CellStats& cell : report.cells)
    std::cout << pegsim::to_string(cell.mode) << ',' << pegsim::format_double(cell.dt) << ','
              << cell.n_runs << ',' << pegsim::format_double(cell.mean_total_active_time) << ','
              << pegsim::format_double(cell.mean_capture_time) << ','
              << pegsim::format_double(cell.capture_rate) << "\n";
  std::cout << "outputs written to " << spec.output_dir << "\n";
  return 0;
}

int run_plot(const std::string& trace_path, const std::string& out_path) {
  const pegsim::EpisodeTrace trace = pegsim::import_trace(trace_path);
  pegsim::render_trajectories(trace, out_path);
  std::cout << "plot written to " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pursuit-evasion simulator: decentralized assignment vs relay pursuit"};
  app.require_subcommand(1);

  std::string run_config;
  std::string run_mode;
  double run_dt = 0.0;
  std::uint64_t run_seed = 0;
  std::string run_out = "trace.csv";
  CLI::App* run = app.add_subcommand("run", "play one episode and export its trace");
  run->add_option("--config", run_config, "scenario file; flags below override it");
  run->add_option("--mode", run_mode, "CENTRALIZED or DECENTRALIZED");
  run->add_option("--dt", run_dt, "step size");
  CLI::Option* seed_opt = run->add_option("--seed", run_seed, "episode seed");
  run->add_option("--out", run_out, "trace output path");

  std::string exp_config;
  CLI::App* experiment = app.add_subcommand("experiment", "run the full (mode, dt) grid");
  experiment->add_option("--config", exp_config, "experiment file")->required();

  std::string plot_trace;
  std::string plot_out = "trace.svg";
  CLI::App* plot = app.add_subcommand("plot", "render a trace file as an SVG");
  plot->add_option("--trace", plot_trace, "trace file to draw")->required();
  plot->add_option("--out", plot_out, "SVG output path");

  try {
    app.parse(argc, argv);
    if (*run)
      return run_single(run_config, run_mode, run_dt, run_seed, seed_opt->count() > 0, run_out);
    if (*experiment) return run_experiment_cmd(exp_config);
    return run_plot(plot_trace, plot_out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

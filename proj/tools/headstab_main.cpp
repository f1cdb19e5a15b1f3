#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "headstab/experiment.hpp"

namespace fs = std::filesystem;
using namespace headstab;

namespace {

Config load_or_default(const std::string& config_path) {
  if (config_path.empty()) return default_config();
  return load_config_file(config_path);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

void write_traces_and_report(const ExperimentResult& res, const fs::path& out_dir,
                             const std::string& scenario, int plot_stride) {
  fs::create_directories(out_dir);
  write_trace_csv(res.baseline, out_dir / (scenario + "_baseline.csv"));
  write_trace_csv(res.proposed, out_dir / (scenario + "_proposed.csv"));
  if (plot_stride > 0) {
    write_plot_csv(res.baseline, out_dir / (scenario + "_baseline_plot.csv"), plot_stride);
    write_plot_csv(res.proposed, out_dir / (scenario + "_proposed_plot.csv"), plot_stride);
  }
  write_report_text(res.report, out_dir / "report.txt");
  write_report_json(res.report, out_dir / "report.json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sagittal-plane head-height stabilization simulator"};
  app.require_subcommand(1);

  std::string scenario_arg = "exp1";
  std::string mode_arg = "both";
  std::string config_arg;
  std::string out_arg = "out";
  std::uint64_t seed_arg = 1;
  std::string param_arg;
  std::string values_arg;
  std::string in_arg;

  auto* run = app.add_subcommand("run", "Run a terrain scenario and report metrics");
  run->add_option("--scenario", scenario_arg, "exp1|exp2|exp3|flat")->required();
  run->add_option("--mode", mode_arg, "baseline|proposed|both");
  run->add_option("--config", config_arg, "config file (key = value lines)");
  run->add_option("--out", out_arg, "output directory");
  run->add_option("--seed", seed_arg, "noise seed");

  auto* report = app.add_subcommand("report", "Print the metrics table from a run directory");
  report->add_option("--in", in_arg, "directory containing report.json")->required();

  auto* sweep = app.add_subcommand("sweep", "Re-run a scenario over a list of values for one config key");
  sweep->add_option("--scenario", scenario_arg, "exp1|exp2|exp3|flat")->required();
  sweep->add_option("--param", param_arg, "config key, e.g. admittance.k_ad")->required();
  sweep->add_option("--values", values_arg, "comma-separated values")->required();
  sweep->add_option("--config", config_arg, "config file");
  sweep->add_option("--out", out_arg, "output directory");
  sweep->add_option("--seed", seed_arg, "noise seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const Scenario sc = scenario_from_name(scenario_arg);
      Config cfg = load_or_default(config_arg);
      cfg.sim.seed = seed_arg;
      const fs::path out_dir(out_arg);
      const std::string name = scenario_name(sc);

      if (mode_arg == "both") {
        const ExperimentResult res = run_experiment(cfg, sc, seed_arg);
        write_traces_and_report(res, out_dir, name, cfg.sim.plot_stride);
        print_report_table(res.report, std::cout);
        std::cout << "traces and report written to " << out_dir.string() << "\n";
      } else if (mode_arg == "baseline" || mode_arg == "proposed") {
        const ControllerMode mode = mode_arg == "baseline"
                                        ? ControllerMode::Baseline
                                        : ControllerMode::Proposed;
        const double ref = calibrate_reference(cfg, mode, seed_arg);
        const SimTrace trace = run_single(cfg, sc, mode, seed_arg);
        fs::create_directories(out_dir);
        const fs::path csv = out_dir / (name + "_" + mode_arg + ".csv");
        write_trace_csv(trace, csv);
        if (cfg.sim.plot_stride > 0) {
          write_plot_csv(trace, out_dir / (name + "_" + mode_arg + "_plot.csv"),
                         cfg.sim.plot_stride);
        }
        std::vector<double> z, v;
        for (const auto& r : trace.records) {
          if (r.t >= cfg.sim.transient_skip) {
            z.push_back(r.z_head);
            v.push_back(r.vz_head);
          }
        }
        const MetricTriple pz = metric_triple(z, ref);
        const MetricTriple vz = metric_triple(v, 0.0);
        std::cout << "scenario " << name << ", mode " << mode_arg
                  << " (reference height " << ref << " m)\n";
        std::cout << "  position: MAE " << pz.mae << " m, RMSE " << pz.rmse
                  << " m, P2P " << pz.p2p << " m\n";
        std::cout << "  velocity: MAE " << vz.mae << " m/s, RMSE " << vz.rmse
                  << " m/s, P2P " << vz.p2p << " m/s\n";
        std::cout << "trace written to " << csv.string() << "\n";
      } else {
        std::cerr << "unknown mode: " << mode_arg << "\n";
        return 1;
      }
    } else if (report->parsed()) {
      const MetricsReport rep = read_report_json(fs::path(in_arg) / "report.json");
      print_report_table(rep, std::cout);
    } else if (sweep->parsed()) {
      const Scenario sc = scenario_from_name(scenario_arg);
      Config cfg = load_or_default(config_arg);
      cfg.sim.seed = seed_arg;
      const auto values = split_csv(values_arg);
      if (values.empty()) {
        std::cerr << "sweep: --values is empty\n";
        return 1;
      }
      const SweepResult res = run_sweep(cfg, sc, seed_arg, param_arg, values);
      print_sweep_table(res, std::cout);
      fs::create_directories(out_arg);
      const fs::path json = fs::path(out_arg) / "sweep.json";
      write_sweep_json(res, json);
      std::cout << "sweep written to " << json.string() << "\n";
    }
  } catch (const SimulationFault& e) {
    std::cerr << "simulation fault: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

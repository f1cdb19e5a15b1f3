#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "headstab/config.hpp"
#include "headstab/metrics.hpp"
#include "headstab/pipeline.hpp"
#include "headstab/trace.hpp"

namespace headstab {

enum class Scenario { Flat, Exp1, Exp2, Exp3 };

Scenario scenario_from_name(const std::string& name);
std::string scenario_name(Scenario scenario);

// Terrain kind + default duration for a scenario, applied over the config.
Config config_for_scenario(Config config, Scenario scenario);

// Flat-ground steady-state head height for this controller: mean z_head
// over the last second of a calibration run.
double calibrate_reference(const Config& config, ControllerMode mode,
                           std::uint64_t seed);

// One closed-loop run at the control cadence. The trace is recorded once
// per control tick. Simulation faults propagate as SimulationFault.
SimTrace run_single(const Config& config, Scenario scenario,
                    ControllerMode mode, std::uint64_t seed);

struct ExperimentResult {
  SimTrace baseline;
  SimTrace proposed;
  MetricsReport report;
};

// Baseline and proposed over the same scenario and seed, with metrics
// against each controller's calibrated flat-ground reference.
ExperimentResult run_experiment(const Config& config, Scenario scenario,
                                std::uint64_t seed);

MetricsReport compare_traces(const SimTrace& baseline, const SimTrace& proposed,
                             double ref_baseline, double ref_proposed,
                             double transient_skip, const std::string& scenario,
                             std::uint64_t seed);

// report.txt: flat key = value lines. report.json: structured mirror of the
// metrics tables (metric, unit, baseline, proposed, improvement).
void write_report_text(const MetricsReport& report, const std::filesystem::path& path);
void write_report_json(const MetricsReport& report, const std::filesystem::path& path);
MetricsReport read_report_json(const std::filesystem::path& path);
void print_report_table(const MetricsReport& report, std::ostream& os);

struct SweepPoint {
  std::string value;
  MetricsReport report;
};
struct SweepResult {
  std::string param;
  std::vector<SweepPoint> points;
};

SweepResult run_sweep(const Config& config, Scenario scenario, std::uint64_t seed,
                      const std::string& param, const std::vector<std::string>& values);
void write_sweep_json(const SweepResult& sweep, const std::filesystem::path& path);
void print_sweep_table(const SweepResult& sweep, std::ostream& os);

}  // namespace headstab

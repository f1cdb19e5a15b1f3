#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "headstab/admittance.hpp"
#include "headstab/contact_detector.hpp"
#include "headstab/force_estimator.hpp"
#include "headstab/height_controller.hpp"
#include "headstab/leg_model.hpp"
#include "headstab/plant.hpp"
#include "headstab/terrain.hpp"

namespace headstab {

struct SimOptions {
  double desired_leg_length = 0.21;  // m, operator reference
  double duration = -1.0;            // s; <= 0 picks the scenario default
  double lead_in = 1.0;              // m of travel before the terrain feature
  double transient_skip = 0.5;       // s excluded from metrics
  double calibration_duration = 3.0; // s, flat-ground reference run
  int plot_stride = 0;               // 0 disables the downsampled plot CSV
  std::uint64_t seed = 1;
};

// One bag for every tunable in the stack. Gravity and the mechanical leg
// range are single-sourced here and propagated by finalize().
struct Config {
  LegGeometry leg;
  PlantParams plant;
  TerrainParams terrain;
  ContactDetector::Params contact;
  EstimatorParams estimator;
  AdmittanceParams admittance;
  HeightGains height;
  SimOptions sim;

  // Propagates shared values (gravity, leg range, sampling period) and
  // checks cross-field invariants. Throws std::invalid_argument.
  void finalize();
};

// Parse "key = value" lines with '#' comments; dotted keys as documented in
// the README. Unknown keys are errors. The file may set any subset.
Config load_config_file(const std::filesystem::path& path);

// Apply one dotted-key override, e.g. ("admittance.K", "40").
void apply_override(Config& config, const std::string& key,
                    const std::string& value);

Config default_config();

}  // namespace headstab

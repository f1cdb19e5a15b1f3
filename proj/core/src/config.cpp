#include "headstab/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace headstab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v) {
  std::size_t used = 0;
  const double x = std::stod(v, &used);
  if (used != v.size()) throw std::invalid_argument("bad number: " + v);
  return x;
}

int to_int(const std::string& v) {
  std::size_t used = 0;
  const int x = std::stoi(v, &used);
  if (used != v.size()) throw std::invalid_argument("bad integer: " + v);
  return x;
}

std::uint64_t to_u64(const std::string& v) {
  std::size_t used = 0;
  const unsigned long long x = std::stoull(v, &used);
  if (used != v.size()) throw std::invalid_argument("bad integer: " + v);
  return static_cast<std::uint64_t>(x);
}

bool to_bool(const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("bad boolean: " + v);
}

}  // namespace

void apply_override(Config& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  using Setter = std::function<void(Config&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"leg.link_length_m", [](Config& c, const std::string& v) { c.leg.link_length = to_double(v); }},

      {"plant.head_mass", [](Config& c, const std::string& v) { c.plant.head_mass = to_double(v); }},
      {"plant.wheel_radius", [](Config& c, const std::string& v) { c.plant.wheel_radius = to_double(v); }},
      {"plant.forward_speed", [](Config& c, const std::string& v) { c.plant.forward_speed = to_double(v); }},
      {"plant.gravity_g", [](Config& c, const std::string& v) { c.plant.gravity = to_double(v); }},
      {"plant.dt", [](Config& c, const std::string& v) { c.plant.dt = to_double(v); }},
      {"plant.ground_stiffness", [](Config& c, const std::string& v) { c.plant.ground_stiffness = to_double(v); }},
      {"plant.ground_damping", [](Config& c, const std::string& v) { c.plant.ground_damping = to_double(v); }},
      {"plant.flight_leg_tau", [](Config& c, const std::string& v) { c.plant.flight_leg_tau = to_double(v); }},
      {"plant.noise.encoder_q", [](Config& c, const std::string& v) { c.plant.noise.encoder_angle = to_double(v); }},
      {"plant.noise.encoder_dq", [](Config& c, const std::string& v) { c.plant.noise.encoder_rate = to_double(v); }},
      {"plant.noise.encoder_ddq", [](Config& c, const std::string& v) { c.plant.noise.encoder_accel = to_double(v); }},
      {"plant.noise.imu", [](Config& c, const std::string& v) { c.plant.noise.imu_accel = to_double(v); }},
      {"plant.noise.torque", [](Config& c, const std::string& v) { c.plant.noise.torque = to_double(v); }},

      {"terrain.kind", [](Config& c, const std::string& v) { c.terrain.kind = terrain_kind_from_name(v); }},
      {"terrain.slope_deg", [](Config& c, const std::string& v) { c.terrain.slope_deg = to_double(v); }},
      {"terrain.rise_len_m", [](Config& c, const std::string& v) { c.terrain.rise_length = to_double(v); }},
      {"terrain.flat_len_m", [](Config& c, const std::string& v) { c.terrain.flat_length = to_double(v); }},
      {"terrain.bump_amplitude_m", [](Config& c, const std::string& v) { c.terrain.bump_amplitude = to_double(v); }},
      {"terrain.bump_wavelength_min_m", [](Config& c, const std::string& v) { c.terrain.bump_wavelength_min = to_double(v); }},
      {"terrain.bump_wavelength_m", [](Config& c, const std::string& v) { c.terrain.bump_wavelength_max = to_double(v); }},
      {"terrain.bump_components", [](Config& c, const std::string& v) { c.terrain.bump_components = to_int(v); }},
      {"terrain.seed", [](Config& c, const std::string& v) { c.terrain.seed = to_u64(v); }},
      {"terrain.sine_amplitude_m", [](Config& c, const std::string& v) { c.terrain.sine_amplitude = to_double(v); }},
      {"terrain.sine_wavelength_m", [](Config& c, const std::string& v) { c.terrain.sine_wavelength = to_double(v); }},

      {"contact.eps_zdd", [](Config& c, const std::string& v) { c.contact.eps_zdd = to_double(v); }},
      {"contact.eps_az", [](Config& c, const std::string& v) { c.contact.eps_az = to_double(v); }},
      {"contact.debounce_ticks", [](Config& c, const std::string& v) { c.contact.debounce_ticks = to_int(v); }},

      {"estimator.k1", [](Config& c, const std::string& v) { c.estimator.k1 = to_double(v); }},
      {"estimator.k2", [](Config& c, const std::string& v) { c.estimator.k2 = to_double(v); }},
      {"estimator.gravity_compensation", [](Config& c, const std::string& v) { c.estimator.gravity_compensation = to_bool(v); }},
      {"estimator.singularity_floor", [](Config& c, const std::string& v) { c.estimator.singularity_floor = to_double(v); }},
      {"estimator.head_mass", [](Config& c, const std::string& v) { c.estimator.head_mass = to_double(v); }},

      {"admittance.K", [](Config& c, const std::string& v) { c.admittance.stiffness = to_double(v); }},
      {"admittance.B", [](Config& c, const std::string& v) { c.admittance.damping = to_double(v); }},
      {"admittance.M", [](Config& c, const std::string& v) { c.admittance.inertia = to_double(v); }},
      {"admittance.k_ad", [](Config& c, const std::string& v) { c.admittance.gain = to_double(v); }},
      {"admittance.T", [](Config& c, const std::string& v) { c.admittance.period = to_double(v); }},
      {"admittance.L_min", [](Config& c, const std::string& v) { c.admittance.min_length = to_double(v); }},
      {"admittance.L_max", [](Config& c, const std::string& v) { c.admittance.max_length = to_double(v); }},

      {"height.kp", [](Config& c, const std::string& v) { c.height.kp = to_double(v); }},
      {"height.kd", [](Config& c, const std::string& v) { c.height.kd = to_double(v); }},
      {"height.tau_max", [](Config& c, const std::string& v) { c.height.tau_max = to_double(v); }},
      {"height.m_H", [](Config& c, const std::string& v) { c.height.head_mass = to_double(v); }},

      {"sim.L_d", [](Config& c, const std::string& v) { c.sim.desired_leg_length = to_double(v); }},
      {"sim.duration_s", [](Config& c, const std::string& v) { c.sim.duration = to_double(v); }},
      {"sim.lead_in_m", [](Config& c, const std::string& v) { c.sim.lead_in = to_double(v); }},
      {"sim.transient_skip_s", [](Config& c, const std::string& v) { c.sim.transient_skip = to_double(v); }},
      {"sim.calibration_s", [](Config& c, const std::string& v) { c.sim.calibration_duration = to_double(v); }},
      {"sim.plot_stride", [](Config& c, const std::string& v) { c.sim.plot_stride = to_int(v); }},
      {"sim.seed", [](Config& c, const std::string& v) { c.sim.seed = to_u64(v); }},
  };

  const auto it = setters.find(key);
  if (it == setters.end()) {
    throw std::invalid_argument("unknown config key: " + key);
  }
  try {
    it->second(c, value);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": " + value);
  }
}

Config load_config_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path.string());
  Config c = default_config();
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      apply_override(c, key, value);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  return c;
}

Config default_config() { return Config{}; }

void Config::finalize() {
  // One gravity for the whole stack.
  estimator.gravity = plant.gravity;
  height.gravity = plant.gravity;
  // The admittance clamp is the mechanical leg range; the plant enforces it too.
  plant.min_leg_length = admittance.min_length;
  plant.max_leg_length = admittance.max_length;
  plant.noise_seed = sim.seed;

  if (!(leg.link_length > 0.0)) {
    throw std::invalid_argument("config: leg.link_length_m must be > 0");
  }
  if (admittance.max_length > 2.0 * leg.link_length) {
    throw std::invalid_argument("config: admittance.L_max exceeds leg reach");
  }
  if (plant.dt > admittance.period + 1e-12) {
    throw std::invalid_argument("config: plant.dt must be <= admittance.T");
  }
  const double ratio = admittance.period / plant.dt;
  if (std::abs(ratio - std::round(ratio)) > 1e-6) {
    throw std::invalid_argument("config: admittance.T must be a multiple of plant.dt");
  }
  if (!(sim.desired_leg_length > admittance.min_length) ||
      !(sim.desired_leg_length < admittance.max_length)) {
    throw std::invalid_argument("config: sim.L_d outside the leg range");
  }
  if (!(estimator.head_mass > 0.0) || !(height.head_mass > 0.0)) {
    throw std::invalid_argument("config: head masses must be > 0");
  }
}

}  // namespace headstab

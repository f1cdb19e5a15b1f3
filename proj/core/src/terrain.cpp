#include "headstab/terrain.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace headstab {

TerrainKind terrain_kind_from_name(const std::string& name) {
  if (name == "flat") return TerrainKind::Flat;
  if (name == "single_slope") return TerrainKind::SingleSlope;
  if (name == "high_freq_rugged") return TerrainKind::HighFreqRugged;
  if (name == "sinusoid") return TerrainKind::Sinusoid;
  throw std::invalid_argument("unknown terrain kind: " + name);
}

std::string terrain_kind_name(TerrainKind kind) {
  switch (kind) {
    case TerrainKind::Flat: return "flat";
    case TerrainKind::SingleSlope: return "single_slope";
    case TerrainKind::HighFreqRugged: return "high_freq_rugged";
    case TerrainKind::Sinusoid: return "sinusoid";
  }
  return "flat";
}

TerrainProfile::TerrainProfile(const TerrainParams& params) : params_(params) {
  if (params_.kind == TerrainKind::SingleSlope) {
    if (!(params_.rise_length > 0.0) || !(params_.flat_length >= 0.0)) {
      throw std::invalid_argument("TerrainProfile: slope lengths must be positive");
    }
    slope_ = std::tan(params_.slope_deg * M_PI / 180.0);
  }
  if (params_.kind == TerrainKind::HighFreqRugged) {
    if (params_.bump_components < 1 ||
        !(params_.bump_wavelength_min > 0.0) ||
        !(params_.bump_wavelength_max >= params_.bump_wavelength_min)) {
      throw std::invalid_argument("TerrainProfile: bad rugged parameters");
    }
    std::mt19937_64 rng(params_.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double weight_sum = 0.0;
    for (int i = 0; i < params_.bump_components; ++i) {
      BumpComponent c;
      c.wavelength = params_.bump_wavelength_min +
                     (params_.bump_wavelength_max - params_.bump_wavelength_min) * u01(rng);
      // longer bumps carry more amplitude, like natural ground
      c.amplitude = c.wavelength * (0.5 + 0.5 * u01(rng));
      c.phase = 2.0 * M_PI * u01(rng);
      weight_sum += c.amplitude;
      bumps_.push_back(c);
    }
    for (auto& c : bumps_) {
      c.amplitude = c.amplitude / weight_sum * params_.bump_amplitude;
    }
  }
  if (params_.kind == TerrainKind::Sinusoid && !(params_.sine_wavelength > 0.0)) {
    throw std::invalid_argument("TerrainProfile: sine wavelength must be positive");
  }
}

double TerrainProfile::height(double x) const {
  switch (params_.kind) {
    case TerrainKind::Flat:
      return 0.0;
    case TerrainKind::SingleSlope: {
      const double rise = params_.rise_length;
      const double top = rise * slope_;
      if (x < 0.0) return 0.0;
      if (x < rise) return x * slope_;
      if (x < rise + params_.flat_length) return top;
      const double xd = x - rise - params_.flat_length;
      if (xd < rise) return top - xd * slope_;
      return 0.0;
    }
    case TerrainKind::HighFreqRugged: {
      double h = 0.0;
      for (const auto& c : bumps_) {
        h += c.amplitude * std::sin(2.0 * M_PI * x / c.wavelength + c.phase);
      }
      return h;
    }
    case TerrainKind::Sinusoid:
      return params_.sine_amplitude *
             std::sin(2.0 * M_PI * x / params_.sine_wavelength);
  }
  return 0.0;
}

double terrain_height(const TerrainProfile& profile, double x) {
  return profile.height(x);
}

}  // namespace headstab

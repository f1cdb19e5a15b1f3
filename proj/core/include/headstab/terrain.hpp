#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace headstab {

enum class TerrainKind { Flat, SingleSlope, HighFreqRugged, Sinusoid };

TerrainKind terrain_kind_from_name(const std::string& name);
std::string terrain_kind_name(TerrainKind kind);

struct TerrainParams {
  TerrainKind kind = TerrainKind::Flat;

  // SingleSlope: flat for x < 0, rises at slope_deg over rise_length,
  // holds for flat_length, then descends symmetrically back to zero.
  double slope_deg = 10.0;
  double rise_length = 0.3;  // m (horizontal run of each ramp)
  double flat_length = 1.0;  // m

  // HighFreqRugged: deterministic sum of bump_components sinusoids with
  // wavelengths in [bump_wavelength_min, bump_wavelength_max], amplitudes
  // weighted toward longer wavelengths and normalized so the summed
  // amplitude equals bump_amplitude.
  double bump_amplitude = 0.012;      // m, bound on |h|
  double bump_wavelength_min = 0.1;   // m
  double bump_wavelength_max = 0.4;   // m
  int bump_components = 8;
  std::uint64_t seed = 42;

  // Sinusoid: amplitude * sin(2*pi*x / wavelength).
  double sine_amplitude = 0.03;   // m
  double sine_wavelength = 1.0;   // m
};

class TerrainProfile {
 public:
  explicit TerrainProfile(const TerrainParams& params);

  double height(double x) const;
  const TerrainParams& params() const { return params_; }

 private:
  struct BumpComponent {
    double amplitude, wavelength, phase;
  };
  TerrainParams params_;
  std::vector<BumpComponent> bumps_;
  double slope_ = 0.0;  // tan(slope_deg)
};

double terrain_height(const TerrainProfile& profile, double x);

}  // namespace headstab

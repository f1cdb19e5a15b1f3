#pragma once

#include <array>

namespace headstab {

// Virtual mass-spring-damper from contact force to a leg-length correction.
struct AdmittanceParams {
  double stiffness = 5.0;    // K, N/m
  double damping = 40.0;     // B, N*s/m
  double inertia = 2.0;      // M, kg
  double gain = 30.0;        // k_ad, dimensionless
  double period = 1e-3;      // T, s
  // Mechanically feasible range for the corrected reference.
  double min_length = 0.028;   // m
  double max_length = 0.2744;  // m
};

// Backward-difference coefficients of the second-order correction equation:
//   a0*dL[k] + a1*dL[k-1] + a2*dL[k-2] = gain * T^2 * F
// a0 = M + B*T + K*T^2, a1 = -(2M + B*T), a2 = M, and a0+a1+a2 = K*T^2.
struct AdmittanceCoefficients {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0;
};

AdmittanceCoefficients admittance_coefficients(const AdmittanceParams& params);

class AdmittanceFilter {
 public:
  // Validates the parameter invariants, the coefficient identity, and that
  // the homogeneous difference equation is strictly stable.
  explicit AdmittanceFilter(const AdmittanceParams& params);

  // One filter update: returns the corrected reference, clamped to the
  // feasible range. The stored history is the applied (post-clamp)
  // correction so the filter cannot wind up beyond the range.
  double step(double force, double desired_length);

  // Zero the correction history. Used on contact loss.
  void reset();

  const AdmittanceParams& params() const { return params_; }
  const AdmittanceCoefficients& coefficients() const { return coeffs_; }
  double correction() const { return dl_k_; }
  std::array<double, 3> history() const { return {dl_k_, dl_km1_, dl_km2_}; }

 private:
  AdmittanceParams params_;
  AdmittanceCoefficients coeffs_;
  double dl_k_ = 0.0, dl_km1_ = 0.0, dl_km2_ = 0.0;
};

}  // namespace headstab

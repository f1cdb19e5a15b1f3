#include "headstab/admittance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace headstab {

AdmittanceCoefficients admittance_coefficients(const AdmittanceParams& p) {
  const double t = p.period;
  return {p.inertia + p.damping * t + p.stiffness * t * t,
          -(2.0 * p.inertia + p.damping * t),
          p.inertia};
}

namespace {

// Largest characteristic-root magnitude of a0 x^2 + a1 x + a2.
double max_root_magnitude(const AdmittanceCoefficients& c) {
  if (c.a2 == 0.0) {
    return c.a0 == 0.0 ? 0.0 : std::abs(c.a1 / c.a0);
  }
  const std::complex<double> disc =
      std::sqrt(std::complex<double>(c.a1 * c.a1 - 4.0 * c.a0 * c.a2, 0.0));
  const std::complex<double> r1 = (-c.a1 + disc) / (2.0 * c.a0);
  const std::complex<double> r2 = (-c.a1 - disc) / (2.0 * c.a0);
  return std::max(std::abs(r1), std::abs(r2));
}

}  // namespace

AdmittanceFilter::AdmittanceFilter(const AdmittanceParams& params)
    : params_(params), coeffs_(admittance_coefficients(params)) {
  if (!(params_.stiffness > 0.0) || params_.damping < 0.0 ||
      params_.inertia < 0.0 || !(params_.period > 0.0)) {
    throw std::invalid_argument("AdmittanceFilter: K > 0, B >= 0, M >= 0, T > 0 required");
  }
  if (!(coeffs_.a0 > 0.0)) {
    throw std::invalid_argument("AdmittanceFilter: a0 must be positive");
  }
  if (!(params_.min_length < params_.max_length)) {
    throw std::invalid_argument("AdmittanceFilter: min_length < max_length required");
  }
  const double kt2 = params_.stiffness * params_.period * params_.period;
  const double sum = coeffs_.a0 + coeffs_.a1 + coeffs_.a2;
  if (std::abs(sum - kt2) > 1e-9 * std::max(1.0, std::abs(coeffs_.a0))) {
    throw std::invalid_argument("AdmittanceFilter: coefficient identity violated");
  }
  if (!(max_root_magnitude(coeffs_) < 1.0)) {
    throw std::invalid_argument("AdmittanceFilter: unstable discretization");
  }
}

double AdmittanceFilter::step(double force, double desired_length) {
  const double t2 = params_.period * params_.period;
  const double dl =
      (params_.gain * t2 * force - coeffs_.a1 * dl_km1_ - coeffs_.a2 * dl_km2_) /
      coeffs_.a0;
  const double corrected = std::clamp(desired_length + dl,
                                      params_.min_length, params_.max_length);
  dl_km2_ = dl_km1_;
  dl_km1_ = corrected - desired_length;  // anti-windup: store what was applied
  dl_k_ = dl_km1_;
  return corrected;
}

void AdmittanceFilter::reset() {
  dl_k_ = dl_km1_ = dl_km2_ = 0.0;
}

}  // namespace headstab

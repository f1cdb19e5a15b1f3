#include "headstab/force_estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace headstab {

Eigen::Vector2d effective_joint_torque(const TorqueReading& reading,
                                       const EstimatorParams& params) {
  return {reading.tau_hip + params.k1 * reading.tau_wheel,
          reading.tau_knee + params.k2 * reading.tau_wheel};
}

ForceEstimate contact_force(const LegGeometry& geom, const JointState& q,
                            const TorqueReading& reading, double head_zdd,
                            const EstimatorParams& params) {
  if (!std::isfinite(reading.tau_hip) || !std::isfinite(reading.tau_knee) ||
      !std::isfinite(reading.tau_wheel) || !std::isfinite(head_zdd) ||
      !std::isfinite(q.q1) || !std::isfinite(q.q2)) {
    throw std::invalid_argument("contact_force: non-finite input");
  }

  ForceEstimate est;
  if (std::abs(std::sin(q.q2)) < params.singularity_floor) {
    est.valid = false;
    return est;
  }

  const Eigen::Vector2d tau = effective_joint_torque(reading, params);
  const Eigen::Matrix2d jt = jacobian(geom, q).transpose();
  est.f_xz = jt.inverse() * tau;

  double zdd = head_zdd;
  if (params.gravity_compensation) zdd -= params.gravity;
  est.f_z = est.f_xz.y() - params.head_mass * zdd;
  est.valid = true;
  return est;
}

ForceHold::ForceHold(int max_hold_ticks) : max_hold_ticks_(max_hold_ticks) {
  if (max_hold_ticks_ < 0) {
    throw std::invalid_argument("ForceHold: max_hold_ticks must be >= 0");
  }
}

double ForceHold::update(const ForceEstimate& estimate) {
  if (estimate.valid) {
    value_ = estimate.f_z;
    has_value_ = true;
    hold_count_ = 0;
    return value_;
  }
  if (has_value_ && hold_count_ < max_hold_ticks_) {
    ++hold_count_;
    return value_;
  }
  value_ = 0.0;
  has_value_ = false;
  return 0.0;
}

void ForceHold::reset() {
  hold_count_ = 0;
  has_value_ = false;
  value_ = 0.0;
}

}  // namespace headstab

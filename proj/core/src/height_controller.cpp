#include "headstab/height_controller.hpp"

#include <algorithm>

namespace headstab {

double delta_force(const HeightGains& gains, const HeightCommand& cmd) {
  return cmd.accel + gains.kp * (cmd.length - cmd.measured_length) +
         gains.kd * (cmd.rate - cmd.measured_rate);
}

double knee_torque(const LegGeometry& geom, const JointState& q,
                   const HeightGains& gains, double delta_f) {
  const double j_z_knee = jacobian(geom, q)(1, 1);  // L*sin(q1+q2)
  return j_z_knee * (delta_f + gains.head_mass * gains.gravity);
}

double track(const HeightGains& gains, const HeightCommand& cmd,
             const LegGeometry& geom, const JointState& q) {
  const double tau = knee_torque(geom, q, gains, delta_force(gains, cmd));
  return std::clamp(tau, -gains.tau_max, gains.tau_max);
}

}  // namespace headstab

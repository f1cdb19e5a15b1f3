#include "headstab/leg_model.hpp"

#include <cmath>
#include <stdexcept>

namespace headstab {

Eigen::Vector2d forward_kinematics(const LegGeometry& geom, const JointState& q) {
  const double L = geom.link_length;
  const double x = L * std::sin(q.q1) + L * std::sin(q.q1 + q.q2);
  const double z = -L * std::cos(q.q1) - L * std::cos(q.q1 + q.q2);
  return {x, z};
}

Eigen::Matrix2d jacobian(const LegGeometry& geom, const JointState& q) {
  const double L = geom.link_length;
  const double c1 = std::cos(q.q1), s1 = std::sin(q.q1);
  const double c12 = std::cos(q.q1 + q.q2), s12 = std::sin(q.q1 + q.q2);
  Eigen::Matrix2d j;
  j << L * (c1 + c12), L * c12,
       L * (s1 + s12), L * s12;
  return j;
}

Eigen::Matrix2d jacobian_dot(const LegGeometry& geom, const JointState& q) {
  const double L = geom.link_length;
  const double c1 = std::cos(q.q1), s1 = std::sin(q.q1);
  const double c12 = std::cos(q.q1 + q.q2), s12 = std::sin(q.q1 + q.q2);
  const double d1 = q.dq1, d12 = q.dq1 + q.dq2;
  Eigen::Matrix2d jd;
  jd << -L * (s1 * d1 + s12 * d12), -L * s12 * d12,
         L * (c1 * d1 + c12 * d12),  L * c12 * d12;
  return jd;
}

Eigen::Vector2d wheel_acceleration(const LegGeometry& geom, const JointState& q) {
  const Eigen::Vector2d qd(q.dq1, q.dq2);
  const Eigen::Vector2d qdd(q.ddq1, q.ddq2);
  return jacobian_dot(geom, q) * qd + jacobian(geom, q) * qdd;
}

WheelCenterState wheel_center(const LegGeometry& geom, const JointState& q) {
  const Eigen::Vector2d p = forward_kinematics(geom, q);
  const Eigen::Vector2d a = wheel_acceleration(geom, q);
  return {p.x(), p.y(), a.x(), a.y()};
}

double leg_length(const LegGeometry& geom, const JointState& q) {
  if (!(std::abs(q.q2) < M_PI)) {
    throw std::domain_error("leg_length: |q2| must be < pi");
  }
  return 2.0 * geom.link_length * std::cos(0.5 * q.q2);
}

double knee_angle_from_length(const LegGeometry& geom, double length) {
  const double reach = 2.0 * geom.link_length;
  if (!(length > 0.0) || length > reach) {
    throw std::domain_error("knee_angle_from_length: length outside (0, 2L]");
  }
  return 2.0 * std::acos(length / reach);
}

}  // namespace headstab

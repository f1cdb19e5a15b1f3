#pragma once

#include <Eigen/Dense>

namespace headstab {

// Planar two-link serial leg. Both links share one length. The base frame
// {O} sits at the hip with z up; the wheel center is the chain tip.
struct LegGeometry {
  double link_length = 0.14;  // m
};

// q1: angle from the negative z-axis to the hip link, q2: angle from the hip
// link to the knee link. Counter-clockwise positive.
struct JointState {
  double q1 = 0.0, q2 = 0.0;      // rad
  double dq1 = 0.0, dq2 = 0.0;    // rad/s
  double ddq1 = 0.0, ddq2 = 0.0;  // rad/s^2
};

struct WheelCenterState {
  double x = 0.0, z = 0.0;    // m, frame {O}
  double ax = 0.0, az = 0.0;  // m/s^2, frame {O}
};

// Wheel center position (x, z) in frame {O}.
Eigen::Vector2d forward_kinematics(const LegGeometry& geom, const JointState& q);

// Geometric Jacobian mapping joint rates to wheel center velocity.
// det = L^2 sin(q2); singular with the leg straight or fully folded.
Eigen::Matrix2d jacobian(const LegGeometry& geom, const JointState& q);

// Entrywise time derivative of the Jacobian under the current joint rates.
Eigen::Matrix2d jacobian_dot(const LegGeometry& geom, const JointState& q);

// Wheel center acceleration relative to frame {O}: Jdot * qd + J * qdd.
Eigen::Vector2d wheel_acceleration(const LegGeometry& geom, const JointState& q);

// Position and relative acceleration combined.
WheelCenterState wheel_center(const LegGeometry& geom, const JointState& q);

// Hip-to-wheel distance, 2L cos(q2/2). Independent of q1. Uses the closed
// form instead of the norm of the FK output to avoid cancellation near the
// folded configuration. Throws std::domain_error for |q2| >= pi.
double leg_length(const LegGeometry& geom, const JointState& q);

// Inverse of leg_length on the q2 > 0 branch. Accepts length in (0, 2L].
double knee_angle_from_length(const LegGeometry& geom, double length);

}  // namespace headstab

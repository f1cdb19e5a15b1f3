#pragma once

#include <Eigen/Dense>

#include "headstab/leg_model.hpp"

namespace headstab {

struct TorqueReading {
  double tau_hip = 0.0;    // N*m
  double tau_knee = 0.0;   // N*m
  double tau_wheel = 0.0;  // N*m
};

struct EstimatorParams {
  // Wheel-torque projection coefficients onto hip/knee joint space.
  double k1 = 0.0;
  double k2 = 0.0;
  // Mass used for head-acceleration compensation. Deliberately decoupled
  // from the plant's head mass: it is the share of mass whose acceleration
  // the estimate should be corrected for, and it is a tuning surface.
  double head_mass = 0.5;  // kg
  double gravity = 9.81;   // m/s^2
  // false: F_z = f_z - m*zdd (zdd = kinematic head acceleration)
  // true:  F_z = f_z - m*(zdd - g)
  bool gravity_compensation = false;
  // Minimum |sin q2| before the Jacobian transpose is considered unusable.
  double singularity_floor = 0.05;
};

struct ForceEstimate {
  Eigen::Vector2d f_xz = Eigen::Vector2d::Zero();  // operational-space force, N
  double f_z = 0.0;   // compensated vertical contact force, N
  bool valid = false; // false near the straight/folded-leg singularity
};

// [tau_hip + k1*tau_wheel, tau_knee + k2*tau_wheel]
Eigen::Vector2d effective_joint_torque(const TorqueReading& reading,
                                       const EstimatorParams& params);

// Operational-space force via the virtual-work relation f = (J^T)^-1 tau,
// then vertical compensation for head motion. head_zdd is the kinematic
// vertical acceleration of the head in the world frame (IMU specific force
// minus g). Throws std::invalid_argument on non-finite inputs.
ForceEstimate contact_force(const LegGeometry& geom, const JointState& q,
                            const TorqueReading& reading, double head_zdd,
                            const EstimatorParams& params);

// Holds the last valid compensated force across invalid estimates, for a
// bounded number of ticks, then decays to zero.
class ForceHold {
 public:
  explicit ForceHold(int max_hold_ticks = 50);

  double update(const ForceEstimate& estimate);
  void reset();

  bool holding() const { return hold_count_ > 0; }

 private:
  int max_hold_ticks_;
  int hold_count_ = 0;
  bool has_value_ = false;
  double value_ = 0.0;
};

}  // namespace headstab

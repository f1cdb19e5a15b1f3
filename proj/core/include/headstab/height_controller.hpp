#pragma once

#include "headstab/leg_model.hpp"

namespace headstab {

struct HeightGains {
  double kp = 1600.0;      // 1/s^2 under the unit-mass reading of delta_force
  double kd = 32.0;        // 1/s
  double head_mass = 2.5;  // m_H, kg
  double gravity = 9.81;   // m/s^2
  double tau_max = 30.0;   // N*m, saturation for track()
};

struct HeightCommand {
  double length = 0.21;  // desired leg length, m
  double rate = 0.0;     // desired leg length rate, m/s
  double accel = 0.0;    // desired leg length acceleration, m/s^2
  double measured_length = 0.21;  // m
  double measured_rate = 0.0;     // m/s
};

// PD plus feedforward: accel + kp*(length error) + kd*(rate error). The sum
// is read as a vertical force command in newtons (unit-mass convention; the
// source formula is dimensionally heterogeneous and is kept verbatim).
double delta_force(const HeightGains& gains, const HeightCommand& cmd);

// Knee torque lifting the head: the (z-row, knee-column) Jacobian entry,
// L*sin(q1+q2), times the commanded lift (delta_f + m_H*g). Unsaturated.
double knee_torque(const LegGeometry& geom, const JointState& q,
                   const HeightGains& gains, double delta_f);

// delta_force composed with knee_torque, saturated to +-tau_max.
double track(const HeightGains& gains, const HeightCommand& cmd,
             const LegGeometry& geom, const JointState& q);

}  // namespace headstab

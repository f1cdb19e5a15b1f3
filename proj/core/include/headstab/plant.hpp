#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "headstab/contact_detector.hpp"
#include "headstab/force_estimator.hpp"
#include "headstab/leg_model.hpp"
#include "headstab/terrain.hpp"

namespace headstab {

// Thrown when the plant reaches a non-physical state; carries the tick index.
class SimulationFault : public std::runtime_error {
 public:
  SimulationFault(long tick, const std::string& reason)
      : std::runtime_error("simulation fault at tick " + std::to_string(tick) +
                           ": " + reason),
        tick_(tick) {}
  long tick() const { return tick_; }

 private:
  long tick_;
};

// Standard deviations of the sensor/actuator noise models; zero disables.
struct NoiseParams {
  double encoder_angle = 0.0;  // rad, on joint angles
  double encoder_rate = 0.0;   // rad/s
  double encoder_accel = 0.0;  // rad/s^2
  double imu_accel = 0.0;      // m/s^2, on the head accelerometer
  double torque = 0.0;         // N*m, on torque readings
};

struct PlantParams {
  double head_mass = 2.5;      // kg, point mass at the hip
  double wheel_radius = 0.06;  // m
  double forward_speed = 0.5;  // m/s, commanded rolling speed
  double gravity = 9.81;       // m/s^2
  double dt = 1e-3;            // s, integration step
  double ground_stiffness = 5e4;  // N/m, penalty contact
  double ground_damping = 500.0;  // N*s/m
  double min_leg_length = 0.028;   // m, mechanical range
  double max_leg_length = 0.2744;  // m
  double flight_leg_tau = 0.02;  // s, unloaded leg servo time constant
  NoiseParams noise;
  std::uint64_t noise_seed = 1;
};

struct SimState {
  double t = 0.0;
  double x_wheel = 0.0;
  double z_wheel = 0.0;
  double z_head = 0.0;
  double vz_head = 0.0;
  JointState q;  // symmetric reconstruction, q1 = -q2/2
  bool in_contact = true;
  double normal_force = 0.0;  // plant truth, >= 0
};

// Everything the control pipeline reads each tick.
struct SensorBundle {
  AccelSample accel;          // head_zdd is specific force: kinematic + g
  double head_zdd_kinematic;  // accel.head_zdd - g (noise included)
  JointState joints;          // measured joint state
  TorqueReading torques;      // torques applied on the previous step
  double leg_length_est;      // from measured q2
  double leg_rate_est;        // from measured dq2
};

// Sagittal-plane plant: a point-mass head rides on a massless actuated leg
// above a wheel rolling over the terrain at commanded speed. The head is
// the only integrated mass. In contact the wheel sits on the surface
// compressed into it by a penalty spring-damper whose penetration balances
// the leg force; off the ground the unloaded leg relaxes toward its
// commanded length until the wheel touches down. The idealized balance
// stack is a constraint that keeps the head vertically above the wheel
// (symmetric joint angles, zero hip torque).
class Plant {
 public:
  Plant(const PlantParams& params, const LegGeometry& geom,
        const TerrainProfile& terrain, double initial_leg_length,
        double initial_x = 0.0);

  const SimState& state() const { return state_; }
  const SensorBundle& sensors() const { return sensors_; }
  long tick() const { return tick_; }

  // Advance one step under the given knee torque. commanded_length is the
  // reference the unloaded leg relaxes toward while airborne.
  void step(double tau_knee, double commanded_length);

  // Advance one step with the leg rigidly locked at the given length and
  // no actuation; ground contact acts through the penalty spring-damper.
  // Exercises the contact integrator in isolation.
  void step_locked(double locked_length);

 private:
  void reconstruct_joints(double prev_q2, double prev_dq2);
  void refresh_sensors(double tau_knee);
  [[noreturn]] void fault(const std::string& reason) const;

  PlantParams params_;
  LegGeometry geom_;
  const TerrainProfile* terrain_;
  SimState state_;
  SensorBundle sensors_;

  double penetration_ = 0.0;  // spring compression state while in contact
  double flight_length_ = 0.0;  // unloaded leg length state
  double prev_vz_ = 0.0;        // for the IMU finite difference
  long tick_ = 0;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace headstab

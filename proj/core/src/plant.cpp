#include "headstab/plant.hpp"

#include <algorithm>
#include <cmath>

namespace headstab {

Plant::Plant(const PlantParams& params, const LegGeometry& geom,
             const TerrainProfile& terrain, double initial_leg_length,
             double initial_x)
    : params_(params), geom_(geom), terrain_(&terrain), rng_(params.noise_seed) {
  if (!(params_.head_mass > 0.0) || !(params_.wheel_radius > 0.0) ||
      !(params_.gravity > 0.0) || !(params_.dt > 0.0) ||
      !(params_.ground_stiffness > 0.0) || !(params_.ground_damping >= 0.0) ||
      !(params_.forward_speed >= 0.0)) {
    throw std::invalid_argument("Plant: parameters must be positive");
  }
  if (!(initial_leg_length > params_.min_leg_length) ||
      !(initial_leg_length < params_.max_leg_length)) {
    throw std::invalid_argument("Plant: initial leg length outside range");
  }

  // Static equilibrium on the local surface.
  penetration_ = params_.head_mass * params_.gravity / params_.ground_stiffness;
  state_.x_wheel = initial_x;
  state_.z_wheel = terrain_->height(initial_x) + params_.wheel_radius - penetration_;
  state_.z_head = state_.z_wheel + initial_leg_length;
  state_.vz_head = 0.0;
  state_.in_contact = true;
  state_.normal_force = params_.head_mass * params_.gravity;
  flight_length_ = initial_leg_length;
  reconstruct_joints(knee_angle_from_length(geom_, initial_leg_length), 0.0);
  // report the torque that holds this equilibrium, not a zero reading
  const double half_q2 = 0.5 * state_.q.q2;
  refresh_sensors(geom_.link_length * std::sin(half_q2) * params_.head_mass *
                  params_.gravity);
}

void Plant::fault(const std::string& reason) const {
  throw SimulationFault(tick_, reason);
}

void Plant::reconstruct_joints(double prev_q2, double prev_dq2) {
  const double d = state_.z_head - state_.z_wheel;
  if (!std::isfinite(d)) fault("non-finite leg length");
  const double q2 = knee_angle_from_length(
      geom_, std::clamp(d, 1e-6, 2.0 * geom_.link_length));
  const double dq2 = (q2 - prev_q2) / params_.dt;
  const double ddq2 = (dq2 - prev_dq2) / params_.dt;
  state_.q.q1 = -0.5 * q2;
  state_.q.q2 = q2;
  state_.q.dq1 = -0.5 * dq2;
  state_.q.dq2 = dq2;
  state_.q.ddq1 = -0.5 * ddq2;
  state_.q.ddq2 = ddq2;
}

void Plant::refresh_sensors(double tau_knee) {
  const auto& n = params_.noise;
  auto noisy = [this](double v, double sigma) {
    return sigma > 0.0 ? v + sigma * gauss_(rng_) : v;
  };

  const double zdd_kin = (state_.vz_head - prev_vz_) / params_.dt;
  // The accelerometer reports specific force, so standing still reads +g.
  sensors_.accel.head_zdd = noisy(zdd_kin + params_.gravity, n.imu_accel);
  sensors_.accel.gravity = params_.gravity;
  sensors_.head_zdd_kinematic = sensors_.accel.head_zdd - params_.gravity;

  JointState m = state_.q;
  m.q1 = noisy(m.q1, n.encoder_angle);
  m.q2 = noisy(m.q2, n.encoder_angle);
  m.dq1 = noisy(m.dq1, n.encoder_rate);
  m.dq2 = noisy(m.dq2, n.encoder_rate);
  m.ddq1 = noisy(m.ddq1, n.encoder_accel);
  m.ddq2 = noisy(m.ddq2, n.encoder_accel);
  sensors_.joints = m;
  sensors_.accel.wheel_az = wheel_acceleration(geom_, m).y();

  sensors_.torques.tau_hip = noisy(0.0, n.torque);
  sensors_.torques.tau_knee = noisy(tau_knee, n.torque);
  sensors_.torques.tau_wheel = noisy(0.0, n.torque);

  sensors_.leg_length_est = 2.0 * geom_.link_length * std::cos(0.5 * m.q2);
  sensors_.leg_rate_est = -geom_.link_length * std::sin(0.5 * m.q2) * m.dq2;
}

void Plant::step(double tau_knee, double commanded_length) {
  if (!std::isfinite(tau_knee)) fault("non-finite knee torque");
  const double dt = params_.dt;
  const double prev_q2 = state_.q.q2;
  const double prev_dq2 = state_.q.dq2;
  prev_vz_ = state_.vz_head;

  ++tick_;
  state_.t += dt;
  state_.x_wheel += params_.forward_speed * dt;
  const double surface = terrain_->height(state_.x_wheel) + params_.wheel_radius;

  if (state_.in_contact) {
    const double d = state_.z_head - state_.z_wheel;
    if (d < params_.min_leg_length || d > params_.max_leg_length) {
      fault("leg length outside range in contact");
    }
    const double half_q2 = 0.5 * knee_angle_from_length(geom_, d);
    const double j_z_knee = geom_.link_length * std::sin(half_q2);
    const double leg_force = tau_knee / j_z_knee;  // vertical, acting up on the head

    if (leg_force <= 0.0) {
      // The leg cannot pull on the ground: lift off.
      state_.in_contact = false;
      flight_length_ = d;
      penetration_ = 0.0;
    } else {
      // Massless wheel: the penalty spring-damper compression balances the
      // leg force. Backward Euler on the penetration rate.
      const double kg = params_.ground_stiffness;
      const double cg = params_.ground_damping;
      penetration_ = (leg_force * dt + cg * penetration_) / (kg * dt + cg);
      state_.z_wheel = surface - penetration_;

      const double accel = leg_force / params_.head_mass - params_.gravity;
      state_.vz_head += accel * dt;
      state_.z_head += state_.vz_head * dt;  // semi-implicit Euler

      const double d_new = state_.z_head - state_.z_wheel;
      if (d_new < params_.min_leg_length) fault("leg crushed against terrain");
      if (d_new > params_.max_leg_length) {
        // Terrain fell away faster than the leg can extend.
        state_.in_contact = false;
        flight_length_ = params_.max_leg_length - 1e-9;
        state_.z_wheel = state_.z_head - flight_length_;
        penetration_ = 0.0;
        state_.normal_force = 0.0;
      } else {
        state_.normal_force = leg_force;
      }
      reconstruct_joints(prev_q2, prev_dq2);
      refresh_sensors(tau_knee);
      return;
    }
  }

  // Flight: ballistic head, unloaded leg relaxing toward its command.
  state_.vz_head += -params_.gravity * dt;
  state_.z_head += state_.vz_head * dt;
  const double target = std::clamp(commanded_length, params_.min_leg_length,
                                   params_.max_leg_length);
  const double alpha = 1.0 - std::exp(-dt / params_.flight_leg_tau);
  flight_length_ += (target - flight_length_) * alpha;
  state_.z_wheel = state_.z_head - flight_length_;
  state_.normal_force = 0.0;
  if (state_.z_wheel < surface) {
    state_.in_contact = true;
    penetration_ = surface - state_.z_wheel;
  }
  reconstruct_joints(prev_q2, prev_dq2);
  refresh_sensors(tau_knee);
}

void Plant::step_locked(double locked_length) {
  const double dt = params_.dt;
  const double prev_q2 = state_.q.q2;
  const double prev_dq2 = state_.q.dq2;
  prev_vz_ = state_.vz_head;

  ++tick_;
  state_.t += dt;
  state_.x_wheel += params_.forward_speed * dt;
  const double surface = terrain_->height(state_.x_wheel) + params_.wheel_radius;

  // Head and wheel move as one rigid body on the penalty contact.
  const double z_wheel = state_.z_head - locked_length;
  const double pen = surface - z_wheel;
  double force = 0.0;
  if (pen > 0.0) {
    force = params_.ground_stiffness * pen -
            params_.ground_damping * state_.vz_head;
    force = std::max(force, 0.0);
  }
  state_.in_contact = pen > 0.0;
  state_.normal_force = force;
  penetration_ = std::max(pen, 0.0);

  const double accel = force / params_.head_mass - params_.gravity;
  state_.vz_head += accel * dt;
  state_.z_head += state_.vz_head * dt;
  state_.z_wheel = state_.z_head - locked_length;
  flight_length_ = locked_length;
  reconstruct_joints(prev_q2, prev_dq2);
  refresh_sensors(0.0);
}

}  // namespace headstab

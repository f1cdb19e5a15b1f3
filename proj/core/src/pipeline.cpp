#include "headstab/pipeline.hpp"

namespace headstab {

ControlPipeline::ControlPipeline(ControllerMode mode, const PipelineConfig& config,
                                 const LegGeometry& geom)
    : mode_(mode),
      config_(config),
      geom_(geom),
      detector_(config.contact),
      admittance_(config.admittance),
      hold_(config.force_hold_ticks),
      nominal_load_(config.height.head_mass * config.height.gravity) {}

double ControlPipeline::tick(const SensorBundle& sensors) {
  const ContactStatus prev_status = detector_.status();
  const ContactDecision decision = detector_.update(sensors.accel);
  if (prev_status == ContactStatus::OnGround &&
      decision.status == ContactStatus::OffGround) {
    // Contact lost: drop the correction history, start fresh on touchdown.
    admittance_.reset();
    hold_.reset();
  }

  telemetry_.status = decision.status;
  telemetry_.estimator_ran = false;
  telemetry_.force_estimate = 0.0;

  double reference = config_.desired_leg_length;
  if (gate(decision) == GateAction::RunEstimator) {
    const ForceEstimate est =
        contact_force(geom_, sensors.joints, sensors.torques,
                      sensors.head_zdd_kinematic, config_.estimator);
    const double f_z = hold_.update(est);
    telemetry_.estimator_ran = true;
    telemetry_.force_estimate = f_z;
    if (mode_ == ControllerMode::Proposed) {
      // The admittance reacts to the terrain push above the static load;
      // positive excess shortens the reference.
      reference = admittance_.step(nominal_load_ - f_z, config_.desired_leg_length);
    }
  } else if (mode_ == ControllerMode::Proposed &&
             decision.status == ContactStatus::OnGround) {
    // On the ground with no usable force pattern: let the correction relax
    // instead of snapping back to the raw reference.
    reference = admittance_.step(0.0, config_.desired_leg_length);
  }
  // Off the ground the height controller tracks the raw reference directly.

  telemetry_.corrected_length = reference;

  HeightCommand cmd;
  cmd.length = reference;
  cmd.rate = 0.0;
  cmd.accel = 0.0;
  cmd.measured_length = sensors.leg_length_est;
  cmd.measured_rate = sensors.leg_rate_est;
  telemetry_.tau_knee = track(config_.height, cmd, geom_, sensors.joints);
  return telemetry_.tau_knee;
}

void ControlPipeline::reset() {
  detector_.reset();
  admittance_.reset();
  hold_.reset();
  telemetry_ = PipelineTelemetry{};
}

}  // namespace headstab

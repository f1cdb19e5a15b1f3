#pragma once

#include "headstab/admittance.hpp"
#include "headstab/contact_detector.hpp"
#include "headstab/force_estimator.hpp"
#include "headstab/height_controller.hpp"
#include "headstab/leg_model.hpp"
#include "headstab/plant.hpp"

namespace headstab {

// Baseline: height controller only, tracking the raw reference.
// Proposed: contact gating + force estimation + admittance reshaping ahead
// of the same height controller.
enum class ControllerMode { Baseline, Proposed };

struct PipelineConfig {
  ContactDetector::Params contact;
  EstimatorParams estimator;
  AdmittanceParams admittance;
  HeightGains height;
  double desired_leg_length = 0.21;  // operator reference, m
  int force_hold_ticks = 50;
};

struct PipelineTelemetry {
  double force_estimate = 0.0;     // compensated F_z fed downstream (0 when bypassed)
  double corrected_length = 0.0;   // reference after admittance
  double tau_knee = 0.0;
  ContactStatus status = ContactStatus::OnGround;
  bool estimator_ran = false;
};

class ControlPipeline {
 public:
  ControlPipeline(ControllerMode mode, const PipelineConfig& config,
                  const LegGeometry& geom);

  // One control tick: sensors in, knee torque out.
  double tick(const SensorBundle& sensors);

  const PipelineTelemetry& telemetry() const { return telemetry_; }
  ControllerMode mode() const { return mode_; }
  double desired_leg_length() const { return config_.desired_leg_length; }
  void reset();

 private:
  ControllerMode mode_;
  PipelineConfig config_;
  LegGeometry geom_;
  ContactDetector detector_;
  AdmittanceFilter admittance_;
  ForceHold hold_;
  PipelineTelemetry telemetry_;
  double nominal_load_;  // static head load m_H*g, N
};

}  // namespace headstab

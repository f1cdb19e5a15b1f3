#include "headstab/contact_detector.hpp"

#include <cmath>
#include <stdexcept>

namespace headstab {

Band band_of(double value, double reference, double eps) {
  const double d = value - reference;
  if (d > eps) return Band::Above;
  if (d < -eps) return Band::Below;
  return Band::Equal;
}

ContactTable ContactTable::standard() {
  ContactTable t;
  const auto on = ContactStatus::OnGround;
  const auto off = ContactStatus::OffGround;
  auto set = [&t](Band zdd, Band az, ContactStatus st, bool est) {
    t.cells[static_cast<int>(zdd)][static_cast<int>(az)] = {st, est};
  };
  // zdd > g
  set(Band::Above, Band::Above, off, false);  // active lifting (picked up)
  set(Band::Above, Band::Below, off, true);   // quirk: off-ground but flagged
  set(Band::Above, Band::Equal, on, false);
  // zdd < g
  set(Band::Below, Band::Above, on, true);
  set(Band::Below, Band::Below, off, false);  // free fall
  set(Band::Below, Band::Equal, off, false);
  // zdd = g
  set(Band::Equal, Band::Above, off, false);  // passively supported
  set(Band::Equal, Band::Below, off, false);
  set(Band::Equal, Band::Equal, on, true);    // nominal stance
  return t;
}

ContactDetector::ContactDetector(const Params& params) : params_(params) {
  if (!(params_.eps_zdd > 0.0) || !(params_.eps_az > 0.0)) {
    throw std::invalid_argument("ContactDetector: dead-bands must be positive");
  }
  if (params_.debounce_ticks < 1) {
    throw std::invalid_argument("ContactDetector: debounce_ticks must be >= 1");
  }
  reset();
}

ContactDecision ContactDetector::classify(const AccelSample& sample) const {
  if (!std::isfinite(sample.head_zdd) || !std::isfinite(sample.wheel_az) ||
      !(sample.gravity > 0.0)) {
    throw std::invalid_argument("ContactDetector: non-finite sample");
  }
  const Band zdd = band_of(sample.head_zdd, sample.gravity, params_.eps_zdd);
  const Band az = band_of(sample.wheel_az, 0.0, params_.eps_az);
  return params_.table.at(zdd, az);
}

ContactDecision ContactDetector::update(const AccelSample& sample) {
  const ContactDecision raw = classify(sample);
  if (raw.status == candidate_) {
    ++candidate_count_;
  } else {
    candidate_ = raw.status;
    candidate_count_ = 1;
  }
  if (candidate_ != status_ && candidate_count_ >= params_.debounce_ticks) {
    status_ = candidate_;
  }
  return {status_, raw.estimate_force};
}

void ContactDetector::reset(ContactStatus assume) {
  status_ = assume;
  candidate_ = assume;
  candidate_count_ = params_.debounce_ticks;
}

GateAction gate(const ContactDecision& decision) {
  if (decision.status == ContactStatus::OffGround || !decision.estimate_force) {
    return GateAction::BypassToHeightController;
  }
  return GateAction::RunEstimator;
}

}  // namespace headstab

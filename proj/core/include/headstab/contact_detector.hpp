#pragma once

#include <array>

namespace headstab {

enum class ContactStatus { OnGround, OffGround };

struct ContactDecision {
  ContactStatus status = ContactStatus::OnGround;
  bool estimate_force = false;
};

// head_zdd is the head's IMU reading: specific force, so a robot standing
// still reads +g. wheel_az is the vertical wheel acceleration relative to
// the head (frame {O}, z up), from the joint-space acceleration map.
struct AccelSample {
  double head_zdd = 0.0;   // m/s^2
  double wheel_az = 0.0;   // m/s^2
  double gravity = 9.81;   // m/s^2
};

// Dead-banded three-way sign: Below / Equal / Above a reference.
enum class Band : int { Below = 0, Equal = 1, Above = 2 };

Band band_of(double value, double reference, double eps);

// 3x3 decision table indexed by (band of head_zdd vs g, band of wheel_az
// vs 0). The default ruleset treats concurrent upward head acceleration and
// wheel retraction as a pick-up, downward head acceleration with wheel
// extension as free fall, and defaults to ground contact where the pattern
// is ambiguous. One quirk: the (Above, Below) cell is off-ground yet
// flagged for force estimation; the gate below still bypasses it because
// the status is off-ground.
struct ContactTable {
  std::array<std::array<ContactDecision, 3>, 3> cells{};

  const ContactDecision& at(Band zdd, Band az) const {
    return cells[static_cast<int>(zdd)][static_cast<int>(az)];
  }
  static ContactTable standard();
};

class ContactDetector {
 public:
  struct Params {
    double eps_zdd = 3.0;    // dead-band around g, m/s^2
    double eps_az = 3.0;     // dead-band around 0, m/s^2
    int debounce_ticks = 3;  // identical classifications before a status switch
    ContactTable table = ContactTable::standard();
  };

  explicit ContactDetector(const Params& params);

  // Raw table lookup, no state. Total over finite inputs.
  ContactDecision classify(const AccelSample& sample) const;

  // classify() plus status debouncing; the returned decision carries the
  // debounced status and the raw per-tick estimate flag.
  ContactDecision update(const AccelSample& sample);

  ContactStatus status() const { return status_; }
  void reset(ContactStatus assume = ContactStatus::OnGround);

  const Params& params() const { return params_; }

 private:
  Params params_;
  ContactStatus status_ = ContactStatus::OnGround;
  ContactStatus candidate_ = ContactStatus::OnGround;
  int candidate_count_ = 0;
};

enum class GateAction { RunEstimator, BypassToHeightController };

// Off the ground, or on the ground without a usable force pattern, the
// pipeline skips estimation and admittance and runs the height controller
// directly.
GateAction gate(const ContactDecision& decision);

}  // namespace headstab

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "headstab/force_estimator.hpp"

using namespace headstab;

namespace {

EstimatorParams params() {
  EstimatorParams p;
  p.k1 = 0.0;
  p.k2 = 0.0;
  p.head_mass = 2.0;
  p.gravity = 9.81;
  p.singularity_floor = 0.05;
  return p;
}

}  // namespace

TEST_CASE("effective joint torque") {
  EstimatorParams p = params();

  SUBCASE("no wheel torque") {
    const Eigen::Vector2d tau = effective_joint_torque({1.5, -2.0, 0.0}, p);
    CHECK(tau.x() == doctest::Approx(1.5));
    CHECK(tau.y() == doctest::Approx(-2.0));
  }
  SUBCASE("zero coefficients ignore wheel torque") {
    const Eigen::Vector2d tau = effective_joint_torque({1.5, -2.0, 7.0}, p);
    CHECK(tau.x() == doctest::Approx(1.5));
    CHECK(tau.y() == doctest::Approx(-2.0));
  }
  SUBCASE("projection coefficients") {
    p.k1 = 0.1;
    p.k2 = 0.2;
    const Eigen::Vector2d tau = effective_joint_torque({1.0, 2.0, 0.5}, p);
    CHECK(tau.x() == doctest::Approx(1.05).epsilon(1e-14));
    CHECK(tau.y() == doctest::Approx(2.10).epsilon(1e-14));
  }
}

TEST_CASE("jacobian-transpose round trip") {
  LegGeometry geom{0.14};
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> knee(0.3, 2.6);
  std::uniform_real_distribution<double> torque(-5.0, 5.0);
  const EstimatorParams p = params();
  for (int i = 0; i < 200; ++i) {
    JointState q;
    q.q2 = knee(rng);
    q.q1 = -0.5 * q.q2;
    const TorqueReading r{torque(rng), torque(rng), 0.0};
    const ForceEstimate est = contact_force(geom, q, r, 0.0, p);
    REQUIRE(est.valid);
    const Eigen::Vector2d back = jacobian(geom, q).transpose() * est.f_xz;
    CHECK(back.x() == doctest::Approx(r.tau_hip).epsilon(1e-9));
    CHECK(back.y() == doctest::Approx(r.tau_knee).epsilon(1e-9));
  }
}

TEST_CASE("linear in the torque reading at fixed configuration") {
  LegGeometry geom{0.14};
  JointState q{.q1 = -0.55, .q2 = 1.1};
  EstimatorParams p = params();
  p.k1 = 0.07;
  p.k2 = -0.11;
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> t(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const TorqueReading a{t(rng), t(rng), t(rng)};
    const TorqueReading b{t(rng), t(rng), t(rng)};
    const double alpha = t(rng), beta = t(rng);
    const TorqueReading mix{alpha * a.tau_hip + beta * b.tau_hip,
                            alpha * a.tau_knee + beta * b.tau_knee,
                            alpha * a.tau_wheel + beta * b.tau_wheel};
    const auto fa = contact_force(geom, q, a, 0.0, p);
    const auto fb = contact_force(geom, q, b, 0.0, p);
    const auto fm = contact_force(geom, q, mix, 0.0, p);
    const Eigen::Vector2d want = alpha * fa.f_xz + beta * fb.f_xz;
    CHECK((fm.f_xz - want).norm() < 1e-9 * std::max(1.0, want.norm()));
  }
}

TEST_CASE("straight leg is singular") {
  LegGeometry geom{0.14};
  const EstimatorParams p = params();
  const ForceEstimate est = contact_force(geom, {.q2 = 0.0}, {0.0, 1.0, 0.0}, 0.0, p);
  CHECK_FALSE(est.valid);
}

TEST_CASE("validity tracks the singularity floor") {
  LegGeometry geom{0.14};
  const EstimatorParams p = params();
  JointState q;
  q.q2 = std::asin(p.singularity_floor) * 0.99;
  CHECK_FALSE(contact_force(geom, q, {0, 1, 0}, 0.0, p).valid);
  q.q2 = std::asin(p.singularity_floor) * 1.01;
  CHECK(contact_force(geom, q, {0, 1, 0}, 0.0, p).valid);
  // folded-leg side as well
  q.q2 = M_PI - std::asin(p.singularity_floor) * 0.5;
  CHECK_FALSE(contact_force(geom, q, {0, 1, 0}, 0.0, p).valid);
}

TEST_CASE("head-motion compensation variants") {
  LegGeometry geom{0.14};
  JointState q{.q1 = -0.6, .q2 = 1.2};
  EstimatorParams p = params();
  const TorqueReading r{0.0, 0.8, 0.0};
  const double zdd = 1.7;

  const ForceEstimate raw = contact_force(geom, q, r, 0.0, p);
  const ForceEstimate comp = contact_force(geom, q, r, zdd, p);
  CHECK(comp.f_z == doctest::Approx(raw.f_z - p.head_mass * zdd).epsilon(1e-12));

  p.gravity_compensation = true;
  const ForceEstimate grav = contact_force(geom, q, r, zdd, p);
  CHECK(grav.f_z ==
        doctest::Approx(raw.f_z - p.head_mass * (zdd - p.gravity)).epsilon(1e-12));
}

TEST_CASE("non-finite inputs are rejected") {
  LegGeometry geom{0.14};
  const EstimatorParams p = params();
  JointState q{.q1 = -0.5, .q2 = 1.0};
  CHECK_THROWS_AS(contact_force(geom, q, {std::nan(""), 0, 0}, 0.0, p),
                  std::invalid_argument);
  CHECK_THROWS_AS(contact_force(geom, q, {0, 0, 0}, INFINITY, p),
                  std::invalid_argument);
  q.q2 = std::nan("");
  CHECK_THROWS_AS(contact_force(geom, q, {0, 0, 0}, 0.0, p), std::invalid_argument);
}

TEST_CASE("force hold keeps the last valid value for a bounded time") {
  ForceHold hold(3);
  ForceEstimate valid;
  valid.valid = true;
  valid.f_z = 42.0;
  ForceEstimate invalid;
  invalid.valid = false;

  CHECK(hold.update(valid) == doctest::Approx(42.0));
  CHECK(hold.update(invalid) == doctest::Approx(42.0));
  CHECK(hold.update(invalid) == doctest::Approx(42.0));
  CHECK(hold.update(invalid) == doctest::Approx(42.0));
  // budget exhausted
  CHECK(hold.update(invalid) == doctest::Approx(0.0));
  // a valid sample restores the budget
  valid.f_z = 7.0;
  CHECK(hold.update(valid) == doctest::Approx(7.0));
  CHECK(hold.update(invalid) == doctest::Approx(7.0));
  hold.reset();
  CHECK(hold.update(invalid) == doctest::Approx(0.0));
}

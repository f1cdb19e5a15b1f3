#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "headstab/admittance.hpp"
#include "headstab/config.hpp"
#include "headstab/contact_detector.hpp"
#include "headstab/force_estimator.hpp"
#include "headstab/height_controller.hpp"
#include "headstab/metrics.hpp"
#include "headstab/pipeline.hpp"
#include "headstab/plant.hpp"

using namespace headstab;

namespace {

JointState bench_state() {
  JointState q;
  q.q2 = 1.2;
  q.q1 = -0.6;
  q.dq1 = 0.4;
  q.dq2 = -0.8;
  q.ddq1 = 2.0;
  q.ddq2 = -4.0;
  return q;
}

void BM_ForwardKinematics(benchmark::State& state) {
  const LegGeometry geom{0.14};
  const JointState q = bench_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_kinematics(geom, q));
  }
}
BENCHMARK(BM_ForwardKinematics);

void BM_WheelAcceleration(benchmark::State& state) {
  const LegGeometry geom{0.14};
  const JointState q = bench_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wheel_acceleration(geom, q));
  }
}
BENCHMARK(BM_WheelAcceleration);

void BM_ContactClassify(benchmark::State& state) {
  ContactDetector det(ContactDetector::Params{});
  const AccelSample s{9.6, 0.4, 9.81};
  for (auto _ : state) {
    benchmark::DoNotOptimize(det.update(s));
  }
}
BENCHMARK(BM_ContactClassify);

void BM_ContactForce(benchmark::State& state) {
  const LegGeometry geom{0.14};
  const JointState q = bench_state();
  const TorqueReading r{0.0, 0.9, 0.0};
  const EstimatorParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contact_force(geom, q, r, 0.3, p));
  }
}
BENCHMARK(BM_ContactForce);

void BM_AdmittanceStep(benchmark::State& state) {
  AdmittanceFilter f(AdmittanceParams{});
  double force = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.step(force, 0.21));
    force = -force;
  }
}
BENCHMARK(BM_AdmittanceStep);

void BM_HeightTrack(benchmark::State& state) {
  const LegGeometry geom{0.14};
  const JointState q = bench_state();
  const HeightGains g;
  HeightCommand cmd;
  cmd.length = 0.213;
  cmd.measured_length = 0.21;
  cmd.measured_rate = -0.02;
  for (auto _ : state) {
    benchmark::DoNotOptimize(track(g, cmd, geom, q));
  }
}
BENCHMARK(BM_HeightTrack);

void BM_PlantStep(benchmark::State& state) {
  Config c = default_config();
  c.finalize();
  TerrainParams tp;
  tp.kind = TerrainKind::Flat;  // constant hold torque stays feasible forever
  const TerrainProfile terrain(tp);
  Plant plant(c.plant, c.leg, terrain, c.sim.desired_leg_length);
  const double tau_hold =
      jacobian(c.leg, plant.state().q)(1, 1) * c.plant.head_mass * c.plant.gravity;
  for (auto _ : state) {
    plant.step(tau_hold, c.sim.desired_leg_length);
    benchmark::DoNotOptimize(plant.state().z_head);
  }
}
BENCHMARK(BM_PlantStep);

void BM_PipelineTick(benchmark::State& state) {
  Config c = default_config();
  c.finalize();
  TerrainParams tp;
  tp.kind = TerrainKind::Sinusoid;
  const TerrainProfile terrain(tp);
  Plant plant(c.plant, c.leg, terrain, c.sim.desired_leg_length);
  PipelineConfig pc;
  pc.contact = c.contact;
  pc.estimator = c.estimator;
  pc.admittance = c.admittance;
  pc.height = c.height;
  pc.desired_leg_length = c.sim.desired_leg_length;
  ControlPipeline pipe(ControllerMode::Proposed, pc, c.leg);
  for (auto _ : state) {
    const double tau = pipe.tick(plant.sensors());
    plant.step(tau, pipe.telemetry().corrected_length);
    benchmark::DoNotOptimize(tau);
  }
}
BENCHMARK(BM_PipelineTick);

void BM_Rmse(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(state.range(0)));
  for (auto& x : v) x = u(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmse(v, 0.1));
  }
}
BENCHMARK(BM_Rmse)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "headstab/config.hpp"
#include "headstab/experiment.hpp"
#include "headstab/trace.hpp"

using namespace headstab;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream f(p, std::ios::binary);
  f << contents;
  return p;
}

}  // namespace

TEST_CASE("config file parsing") {
  const fs::path p = temp_file("hs_cfg_ok.cfg", R"(
# comment line
admittance.K = 40      # trailing comment
admittance.k_ad = 12
contact.debounce_ticks = 5
estimator.gravity_compensation = true
terrain.kind = sinusoid
sim.seed = 99
height.m_H = 3.5
)");
  const Config c = load_config_file(p);
  CHECK(c.admittance.stiffness == doctest::Approx(40.0));
  CHECK(c.admittance.gain == doctest::Approx(12.0));
  CHECK(c.contact.debounce_ticks == 5);
  CHECK(c.estimator.gravity_compensation);
  CHECK(c.terrain.kind == TerrainKind::Sinusoid);
  CHECK(c.sim.seed == 99);
  CHECK(c.height.head_mass == doctest::Approx(3.5));
}

TEST_CASE("unknown keys are errors") {
  const fs::path p = temp_file("hs_cfg_bad.cfg", "admitance.K = 40\n");
  CHECK_THROWS_AS(load_config_file(p), std::invalid_argument);
  Config c = default_config();
  CHECK_THROWS_AS(apply_override(c, "plant.massive", "1"), std::invalid_argument);
}

TEST_CASE("bad values are errors with context") {
  const fs::path p = temp_file("hs_cfg_badval.cfg", "admittance.K = forty\n");
  CHECK_THROWS_AS(load_config_file(p), std::invalid_argument);
  Config c = default_config();
  CHECK_THROWS_AS(apply_override(c, "contact.debounce_ticks", "2.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_override(c, "estimator.gravity_compensation", "yes"),
                  std::invalid_argument);
}

TEST_CASE("finalize propagates shared values and validates") {
  Config c = default_config();
  apply_override(c, "plant.gravity_g", "9.80665");
  apply_override(c, "admittance.L_min", "0.05");
  apply_override(c, "admittance.L_max", "0.25");
  c.finalize();
  CHECK(c.estimator.gravity == doctest::Approx(9.80665));
  CHECK(c.height.gravity == doctest::Approx(9.80665));
  CHECK(c.plant.min_leg_length == doctest::Approx(0.05));
  CHECK(c.plant.max_leg_length == doctest::Approx(0.25));

  SUBCASE("dt must divide the control period") {
    Config bad = default_config();
    apply_override(bad, "plant.dt", "0.0009");
    CHECK_THROWS_AS(bad.finalize(), std::invalid_argument);
    apply_override(bad, "plant.dt", "0.0005");
    CHECK_NOTHROW(bad.finalize());
  }
  SUBCASE("dt above the control period is rejected") {
    Config bad = default_config();
    apply_override(bad, "plant.dt", "0.002");
    CHECK_THROWS_AS(bad.finalize(), std::invalid_argument);
  }
  SUBCASE("reference length must be inside the leg range") {
    Config bad = default_config();
    apply_override(bad, "sim.L_d", "0.5");
    CHECK_THROWS_AS(bad.finalize(), std::invalid_argument);
  }
  SUBCASE("clamp cannot exceed the reach") {
    Config bad = default_config();
    apply_override(bad, "admittance.L_max", "0.5");
    CHECK_THROWS_AS(bad.finalize(), std::invalid_argument);
  }
}

TEST_CASE("every documented key is accepted") {
  const char* keys[] = {
      "leg.link_length_m",
      "plant.head_mass", "plant.wheel_radius", "plant.forward_speed",
      "plant.gravity_g", "plant.dt", "plant.ground_stiffness",
      "plant.ground_damping", "plant.flight_leg_tau",
      "plant.noise.encoder_q", "plant.noise.encoder_dq",
      "plant.noise.encoder_ddq", "plant.noise.imu", "plant.noise.torque",
      "terrain.slope_deg", "terrain.rise_len_m", "terrain.flat_len_m",
      "terrain.bump_amplitude_m", "terrain.bump_wavelength_min_m",
      "terrain.bump_wavelength_m",
      "terrain.sine_amplitude_m", "terrain.sine_wavelength_m",
      "contact.eps_zdd", "contact.eps_az",
      "estimator.k1", "estimator.k2", "estimator.singularity_floor",
      "estimator.head_mass",
      "admittance.K", "admittance.B", "admittance.M", "admittance.k_ad",
      "admittance.T", "admittance.L_min", "admittance.L_max",
      "height.kp", "height.kd", "height.tau_max", "height.m_H",
      "sim.L_d", "sim.duration_s", "sim.lead_in_m", "sim.transient_skip_s",
      "sim.calibration_s",
  };
  Config c = default_config();
  for (const char* k : keys) {
    CAPTURE(k);
    CHECK_NOTHROW(apply_override(c, k, "0.11"));
  }
  CHECK_NOTHROW(apply_override(c, "terrain.kind", "flat"));
  CHECK_NOTHROW(apply_override(c, "terrain.seed", "42"));
  CHECK_NOTHROW(apply_override(c, "terrain.bump_components", "4"));
  CHECK_NOTHROW(apply_override(c, "contact.debounce_ticks", "2"));
  CHECK_NOTHROW(apply_override(c, "sim.plot_stride", "10"));
  CHECK_NOTHROW(apply_override(c, "sim.seed", "12345"));
  CHECK_NOTHROW(apply_override(c, "estimator.gravity_compensation", "false"));
}

TEST_CASE("trace CSV format") {
  SimTrace trace;
  trace.dt = 1e-3;
  for (int i = 0; i < 5; ++i) {
    TraceRecord r;
    r.t = i * 1e-3;
    r.z_head = 0.123456789123 + i;
    r.vz_head = -1.0 / 3.0;
    r.fz_est = 24.525;
    r.fz_true = 24.525;
    r.l_desired = 0.21;
    r.l_corrected = 0.20999;
    r.l_est = 0.209;
    r.tau_knee = 0.7;
    r.contact = i % 2 == 0;
    trace.records.push_back(r);
  }
  const fs::path p = fs::temp_directory_path() / "hs_trace.csv";
  write_trace_csv(trace, p);

  SUBCASE("header and column order") {
    std::ifstream f(p);
    std::string header;
    std::getline(f, header);
    CHECK(header ==
          "t,z_head,vz_head,Fz_est,Fz_true,L_d,L_d_prime,L_est,tau_knee,contact");
    std::string row;
    std::getline(f, row);
    CHECK(row.substr(row.size() - 2) == ",1");  // contact flag as 0/1
  }

  SUBCASE("read-back matches to the serialized precision") {
    const SimTrace back = read_trace_csv(p);
    REQUIRE(back.records.size() == trace.records.size());
    for (std::size_t i = 0; i < back.records.size(); ++i) {
      CHECK(back.records[i].z_head ==
            doctest::Approx(trace.records[i].z_head).epsilon(1e-8));
      CHECK(back.records[i].contact == trace.records[i].contact);
    }
  }

  SUBCASE("re-serialization is byte-identical") {
    const SimTrace back = read_trace_csv(p);
    const fs::path p2 = fs::temp_directory_path() / "hs_trace2.csv";
    write_trace_csv(back, p2);
    std::ifstream a(p, std::ios::binary), b(p2, std::ios::binary);
    const std::string sa((std::istreambuf_iterator<char>(a)), {});
    const std::string sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
  }

  SUBCASE("plot emitter downsamples") {
    const fs::path p3 = fs::temp_directory_path() / "hs_plot.csv";
    write_plot_csv(trace, p3, 2);
    const SimTrace down = read_trace_csv(p3);
    CHECK(down.records.size() == 3);
    CHECK(down.records[1].t == doctest::Approx(2e-3));
  }
}

TEST_CASE("report serialization round-trips losslessly") {
  MetricsReport rep;
  rep.scenario = "exp2";
  rep.seed = 424242;
  rep.transient_skip = 0.5;
  rep.reference_baseline = 0.2695123456789;
  rep.reference_proposed = 0.2695123456788;
  rep.position_baseline = {0.0103, 0.0143, 0.0625};
  rep.position_proposed = {0.0032, 0.0049, 0.0402};
  rep.velocity_baseline = {0.0157, 0.0538, 0.5928};
  rep.velocity_proposed = {0.0144, 0.0354, 0.3660};
  rep.position_improvement =
      improvement_triple(rep.position_baseline, rep.position_proposed);
  rep.velocity_improvement =
      improvement_triple(rep.velocity_baseline, rep.velocity_proposed);

  const fs::path p = fs::temp_directory_path() / "hs_report.json";
  write_report_json(rep, p);
  const MetricsReport back = read_report_json(p);
  CHECK(back == rep);
}

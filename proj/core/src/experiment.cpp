#include "headstab/experiment.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace headstab {

namespace {

// Distinct noise stream for the calibration run of each mode.
constexpr std::uint64_t kCalibrationSalt = 0x9e3779b97f4a7c15ull;
constexpr std::uint64_t kProposedSalt = 0x517cc1b727220a95ull;

std::uint64_t run_seed(std::uint64_t seed, ControllerMode mode, bool calibration) {
  std::uint64_t s = seed;
  if (mode == ControllerMode::Proposed) s ^= kProposedSalt;
  if (calibration) s ^= kCalibrationSalt;
  return s;
}

double scenario_default_duration(Scenario scenario) {
  switch (scenario) {
    case Scenario::Flat: return 6.0;
    case Scenario::Exp1: return 6.0;
    case Scenario::Exp2: return 10.0;
    case Scenario::Exp3: return 10.0;
  }
  return 6.0;
}

PipelineConfig pipeline_config(const Config& c) {
  PipelineConfig p;
  p.contact = c.contact;
  p.estimator = c.estimator;
  p.admittance = c.admittance;
  p.height = c.height;
  p.desired_leg_length = c.sim.desired_leg_length;
  return p;
}

SimTrace run_loop(const Config& cfg, const TerrainProfile& terrain,
                  ControllerMode mode, std::uint64_t noise_seed,
                  double duration, double initial_x) {
  Config c = cfg;
  c.finalize();
  c.plant.noise_seed = noise_seed;

  Plant plant(c.plant, c.leg, terrain, c.sim.desired_leg_length, initial_x);
  ControlPipeline pipe(mode, pipeline_config(c), c.leg);

  const int decimation =
      static_cast<int>(std::llround(c.admittance.period / c.plant.dt));
  const long n_ctrl =
      std::lround(duration / c.admittance.period);

  SimTrace trace;
  trace.dt = c.admittance.period;
  trace.records.reserve(static_cast<std::size_t>(n_ctrl));

  for (long k = 0; k < n_ctrl; ++k) {
    const SensorBundle& bundle = plant.sensors();
    const double tau = pipe.tick(bundle);
    const auto& tm = pipe.telemetry();
    const auto& st = plant.state();

    TraceRecord r;
    r.t = st.t;
    r.z_head = st.z_head;
    r.vz_head = st.vz_head;
    r.fz_est = tm.force_estimate;
    r.fz_true = st.normal_force;
    r.l_desired = c.sim.desired_leg_length;
    r.l_corrected = tm.corrected_length;
    r.l_est = bundle.leg_length_est;
    r.tau_knee = tau;
    r.contact = tm.status == ContactStatus::OnGround;
    trace.records.push_back(r);

    for (int s = 0; s < decimation; ++s) {
      plant.step(tau, tm.corrected_length);
    }
  }
  return trace;
}

std::vector<double> column(const SimTrace& trace, double skip,
                           double TraceRecord::* field) {
  std::vector<double> out;
  out.reserve(trace.records.size());
  for (const auto& r : trace.records) {
    if (r.t >= skip) out.push_back(r.*field);
  }
  return out;
}

nlohmann::json triple_json(const char* unit, const MetricTriple& base,
                           const MetricTriple& prop, const MetricTriple& imp) {
  auto row = [&](const char* name, double b, double p, double i) {
    return nlohmann::json{{"metric", name}, {"unit", unit},
                          {"baseline", b}, {"proposed", p},
                          {"improvement_pct", i}};
  };
  return nlohmann::json::array({
      row("MAE", base.mae, prop.mae, imp.mae),
      row("RMSE", base.rmse, prop.rmse, imp.rmse),
      row("P2P", base.p2p, prop.p2p, imp.p2p),
  });
}

MetricTriple triple_from_json(const nlohmann::json& rows, const char* which) {
  MetricTriple t;
  for (const auto& row : rows) {
    const std::string name = row.at("metric");
    const double v = row.at(which);
    if (name == "MAE") t.mae = v;
    else if (name == "RMSE") t.rmse = v;
    else if (name == "P2P") t.p2p = v;
  }
  return t;
}

}  // namespace

Scenario scenario_from_name(const std::string& name) {
  if (name == "flat") return Scenario::Flat;
  if (name == "exp1") return Scenario::Exp1;
  if (name == "exp2") return Scenario::Exp2;
  if (name == "exp3") return Scenario::Exp3;
  throw std::invalid_argument("unknown scenario: " + name);
}

std::string scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::Flat: return "flat";
    case Scenario::Exp1: return "exp1";
    case Scenario::Exp2: return "exp2";
    case Scenario::Exp3: return "exp3";
  }
  return "flat";
}

Config config_for_scenario(Config config, Scenario scenario) {
  switch (scenario) {
    case Scenario::Flat: config.terrain.kind = TerrainKind::Flat; break;
    case Scenario::Exp1: config.terrain.kind = TerrainKind::SingleSlope; break;
    case Scenario::Exp2: config.terrain.kind = TerrainKind::HighFreqRugged; break;
    case Scenario::Exp3: config.terrain.kind = TerrainKind::Sinusoid; break;
  }
  if (config.sim.duration <= 0.0) {
    config.sim.duration = scenario_default_duration(scenario);
  }
  return config;
}

double calibrate_reference(const Config& config, ControllerMode mode,
                           std::uint64_t seed) {
  Config c = config_for_scenario(config, Scenario::Flat);
  c.sim.duration = config.sim.calibration_duration;
  TerrainParams tp = c.terrain;
  tp.kind = TerrainKind::Flat;
  const TerrainProfile flat(tp);
  const SimTrace trace = run_loop(c, flat, mode, run_seed(seed, mode, true),
                                  c.sim.duration, -c.sim.lead_in);
  const double window = std::min(1.0, c.sim.duration / 2.0);
  const double t_from = trace.records.back().t - window;
  double sum = 0.0;
  long n = 0;
  for (const auto& r : trace.records) {
    if (r.t >= t_from) { sum += r.z_head; ++n; }
  }
  if (n == 0) throw std::runtime_error("calibration window empty");
  return sum / static_cast<double>(n);
}

SimTrace run_single(const Config& config, Scenario scenario,
                    ControllerMode mode, std::uint64_t seed) {
  const Config c = config_for_scenario(config, scenario);
  const TerrainProfile terrain(c.terrain);
  return run_loop(c, terrain, mode, run_seed(seed, mode, false),
                  c.sim.duration, -c.sim.lead_in);
}

MetricsReport compare_traces(const SimTrace& baseline, const SimTrace& proposed,
                             double ref_baseline, double ref_proposed,
                             double transient_skip, const std::string& scenario,
                             std::uint64_t seed) {
  MetricsReport rep;
  rep.scenario = scenario;
  rep.seed = seed;
  rep.transient_skip = transient_skip;
  rep.reference_baseline = ref_baseline;
  rep.reference_proposed = ref_proposed;

  const auto zb = column(baseline, transient_skip, &TraceRecord::z_head);
  const auto zp = column(proposed, transient_skip, &TraceRecord::z_head);
  const auto vb = column(baseline, transient_skip, &TraceRecord::vz_head);
  const auto vp = column(proposed, transient_skip, &TraceRecord::vz_head);

  rep.position_baseline = metric_triple(zb, ref_baseline);
  rep.position_proposed = metric_triple(zp, ref_proposed);
  rep.velocity_baseline = metric_triple(vb, 0.0);
  rep.velocity_proposed = metric_triple(vp, 0.0);
  rep.position_improvement =
      improvement_triple(rep.position_baseline, rep.position_proposed);
  rep.velocity_improvement =
      improvement_triple(rep.velocity_baseline, rep.velocity_proposed);
  return rep;
}

ExperimentResult run_experiment(const Config& config, Scenario scenario,
                                std::uint64_t seed) {
  ExperimentResult result;
  const double ref_b = calibrate_reference(config, ControllerMode::Baseline, seed);
  const double ref_p = calibrate_reference(config, ControllerMode::Proposed, seed);
  result.baseline = run_single(config, scenario, ControllerMode::Baseline, seed);
  result.proposed = run_single(config, scenario, ControllerMode::Proposed, seed);
  result.report = compare_traces(result.baseline, result.proposed, ref_b, ref_p,
                                 config.sim.transient_skip,
                                 scenario_name(scenario), seed);
  return result;
}

void write_report_text(const MetricsReport& rep, const std::filesystem::path& path) {
  std::ostringstream os;
  os << std::setprecision(9);
  os << "# metrics vs calibrated flat-ground reference; first "
     << rep.transient_skip << " s excluded\n";
  os << "scenario = " << rep.scenario << "\n";
  os << "seed = " << rep.seed << "\n";
  os << "reference_height.baseline = " << rep.reference_baseline << "\n";
  os << "reference_height.proposed = " << rep.reference_proposed << "\n";
  auto triple = [&os](const std::string& prefix, const MetricTriple& t) {
    os << prefix << ".mae = " << t.mae << "\n";
    os << prefix << ".rmse = " << t.rmse << "\n";
    os << prefix << ".p2p = " << t.p2p << "\n";
  };
  triple("position.baseline", rep.position_baseline);
  triple("position.proposed", rep.position_proposed);
  triple("position.improvement_pct", rep.position_improvement);
  triple("velocity.baseline", rep.velocity_baseline);
  triple("velocity.proposed", rep.velocity_proposed);
  triple("velocity.improvement_pct", rep.velocity_improvement);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  const std::string s = os.str();
  f.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void write_report_json(const MetricsReport& rep, const std::filesystem::path& path) {
  nlohmann::json j;
  j["scenario"] = rep.scenario;
  j["seed"] = rep.seed;
  j["transient_skip_s"] = rep.transient_skip;
  j["reference_height"] = {{"baseline", rep.reference_baseline},
                           {"proposed", rep.reference_proposed}};
  j["position"] = triple_json("m", rep.position_baseline, rep.position_proposed,
                              rep.position_improvement);
  j["velocity"] = triple_json("m/s", rep.velocity_baseline, rep.velocity_proposed,
                              rep.velocity_improvement);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << "\n";
}

MetricsReport read_report_json(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  f >> j;
  MetricsReport rep;
  rep.scenario = j.at("scenario");
  rep.seed = j.at("seed");
  rep.transient_skip = j.at("transient_skip_s");
  rep.reference_baseline = j.at("reference_height").at("baseline");
  rep.reference_proposed = j.at("reference_height").at("proposed");
  rep.position_baseline = triple_from_json(j.at("position"), "baseline");
  rep.position_proposed = triple_from_json(j.at("position"), "proposed");
  rep.position_improvement = triple_from_json(j.at("position"), "improvement_pct");
  rep.velocity_baseline = triple_from_json(j.at("velocity"), "baseline");
  rep.velocity_proposed = triple_from_json(j.at("velocity"), "proposed");
  rep.velocity_improvement = triple_from_json(j.at("velocity"), "improvement_pct");
  return rep;
}

void print_report_table(const MetricsReport& rep, std::ostream& os) {
  os << "scenario: " << rep.scenario << " (seed " << rep.seed << ")\n";
  os << "  metric   unit   baseline     proposed     improvement\n";
  auto row = [&os](const char* name, const char* unit, double b, double p, double i) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "  %-6s   %-4s   %-10.4g   %-10.4g   %+.1f%%\n",
                  name, unit, b, p, i);
    os << buf;
  };
  os << "  position (z)\n";
  row("MAE", "m", rep.position_baseline.mae, rep.position_proposed.mae,
      rep.position_improvement.mae);
  row("RMSE", "m", rep.position_baseline.rmse, rep.position_proposed.rmse,
      rep.position_improvement.rmse);
  row("P2P", "m", rep.position_baseline.p2p, rep.position_proposed.p2p,
      rep.position_improvement.p2p);
  os << "  velocity (vz)\n";
  row("MAE", "m/s", rep.velocity_baseline.mae, rep.velocity_proposed.mae,
      rep.velocity_improvement.mae);
  row("RMSE", "m/s", rep.velocity_baseline.rmse, rep.velocity_proposed.rmse,
      rep.velocity_improvement.rmse);
  row("P2P", "m/s", rep.velocity_baseline.p2p, rep.velocity_proposed.p2p,
      rep.velocity_improvement.p2p);
}

SweepResult run_sweep(const Config& config, Scenario scenario, std::uint64_t seed,
                      const std::string& param,
                      const std::vector<std::string>& values) {
  SweepResult sweep;
  sweep.param = param;
  for (const auto& v : values) {
    Config c = config;
    apply_override(c, param, v);
    const ExperimentResult res = run_experiment(c, scenario, seed);
    sweep.points.push_back({v, res.report});
  }
  return sweep;
}

void write_sweep_json(const SweepResult& sweep, const std::filesystem::path& path) {
  nlohmann::json j;
  j["param"] = sweep.param;
  j["points"] = nlohmann::json::array();
  for (const auto& pt : sweep.points) {
    nlohmann::json p;
    p["value"] = pt.value;
    p["position_improvement_pct"] = {{"mae", pt.report.position_improvement.mae},
                                     {"rmse", pt.report.position_improvement.rmse},
                                     {"p2p", pt.report.position_improvement.p2p}};
    p["velocity_improvement_pct"] = {{"mae", pt.report.velocity_improvement.mae},
                                     {"rmse", pt.report.velocity_improvement.rmse},
                                     {"p2p", pt.report.velocity_improvement.p2p}};
    j["points"].push_back(p);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << "\n";
}

void print_sweep_table(const SweepResult& sweep, std::ostream& os) {
  os << "sweep over " << sweep.param
     << " (improvement %, position then velocity: MAE/RMSE/P2P)\n";
  for (const auto& pt : sweep.points) {
    const auto& p = pt.report.position_improvement;
    const auto& v = pt.report.velocity_improvement;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "  %-12s  pos %+6.1f / %+6.1f / %+6.1f   vel %+6.1f / %+6.1f / %+6.1f\n",
                  pt.value.c_str(), p.mae, p.rmse, p.p2p, v.mae, v.rmse, v.p2p);
    os << buf;
  }
}

}  // namespace headstab

#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace headstab {

// All three throw std::invalid_argument on an empty series.
double mae(std::span<const double> series, double reference);
double rmse(std::span<const double> series, double reference);
double p2p(std::span<const double> series);

// 100 * (1 - proposed / baseline); requires baseline > 0.
double improvement_pct(double baseline, double proposed);

struct MetricTriple {
  double mae = 0.0, rmse = 0.0, p2p = 0.0;

  bool operator==(const MetricTriple&) const = default;
};

MetricTriple metric_triple(std::span<const double> series, double reference);

struct MetricsReport {
  std::string scenario;
  std::uint64_t seed = 0;
  double transient_skip = 0.0;       // s excluded from the start of each run
  double reference_baseline = 0.0;   // calibrated head heights, m
  double reference_proposed = 0.0;

  MetricTriple position_baseline, position_proposed;
  MetricTriple velocity_baseline, velocity_proposed;
  MetricTriple position_improvement, velocity_improvement;  // percent

  bool operator==(const MetricsReport&) const = default;
};

MetricTriple improvement_triple(const MetricTriple& baseline,
                                const MetricTriple& proposed);

}  // namespace headstab

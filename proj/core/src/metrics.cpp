#include "headstab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace headstab {

double mae(std::span<const double> series, double reference) {
  if (series.empty()) throw std::invalid_argument("mae: empty series");
  double sum = 0.0;
  for (double v : series) sum += std::abs(v - reference);
  return sum / static_cast<double>(series.size());
}

double rmse(std::span<const double> series, double reference) {
  if (series.empty()) throw std::invalid_argument("rmse: empty series");
  double sum = 0.0;
  for (double v : series) {
    const double d = v - reference;
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(series.size()));
}

double p2p(std::span<const double> series) {
  if (series.empty()) throw std::invalid_argument("p2p: empty series");
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  return *hi - *lo;
}

double improvement_pct(double baseline, double proposed) {
  if (!(baseline > 0.0)) {
    throw std::invalid_argument("improvement_pct: baseline must be > 0");
  }
  return 100.0 * (1.0 - proposed / baseline);
}

MetricTriple metric_triple(std::span<const double> series, double reference) {
  return {mae(series, reference), rmse(series, reference), p2p(series)};
}

MetricTriple improvement_triple(const MetricTriple& baseline,
                                const MetricTriple& proposed) {
  return {improvement_pct(baseline.mae, proposed.mae),
          improvement_pct(baseline.rmse, proposed.rmse),
          improvement_pct(baseline.p2p, proposed.p2p)};
}

}  // namespace headstab

#pragma once

#include <filesystem>
#include <vector>

namespace headstab {

struct TraceRecord {
  double t = 0.0;
  double z_head = 0.0;
  double vz_head = 0.0;
  double fz_est = 0.0;
  double fz_true = 0.0;
  double l_desired = 0.0;
  double l_corrected = 0.0;
  double l_est = 0.0;
  double tau_knee = 0.0;
  bool contact = true;
};

struct SimTrace {
  double dt = 1e-3;
  std::vector<TraceRecord> records;
};

// Columns, in order: t, z_head, vz_head, Fz_est, Fz_true, L_d, L_d_prime,
// L_est, tau_knee, contact. Floats with 9 significant digits, contact 0/1.
// Byte-deterministic for identical traces.
void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path);

SimTrace read_trace_csv(const std::filesystem::path& path);

// Every stride-th record, same columns. stride >= 1.
void write_plot_csv(const SimTrace& trace, const std::filesystem::path& path,
                    int stride);

}  // namespace headstab

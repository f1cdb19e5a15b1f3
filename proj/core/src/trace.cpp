#include "headstab/trace.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace headstab {

namespace {

constexpr const char* kHeader =
    "t,z_head,vz_head,Fz_est,Fz_true,L_d,L_d_prime,L_est,tau_knee,contact";

// Locale-independent, 9 significant digits.
void append_double(std::string& out, double v) {
  std::array<char, 48> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 9);
  out.append(buf.data(), res.ptr);
}

}  // namespace

void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path) {
  std::string out;
  out.reserve(trace.records.size() * 96 + 128);
  out += kHeader;
  out += '\n';
  for (const auto& r : trace.records) {
    append_double(out, r.t); out += ',';
    append_double(out, r.z_head); out += ',';
    append_double(out, r.vz_head); out += ',';
    append_double(out, r.fz_est); out += ',';
    append_double(out, r.fz_true); out += ',';
    append_double(out, r.l_desired); out += ',';
    append_double(out, r.l_corrected); out += ',';
    append_double(out, r.l_est); out += ',';
    append_double(out, r.tau_knee); out += ',';
    out += r.contact ? '1' : '0';
    out += '\n';
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open trace file: " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

SimTrace read_trace_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open trace file: " + path.string());
  std::string line;
  if (!std::getline(f, line) || line != kHeader) {
    throw std::runtime_error("bad trace header in " + path.string());
  }
  SimTrace trace;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::array<double, 10> v{};
    std::size_t pos = 0;
    for (int i = 0; i < 10; ++i) {
      const std::size_t next = line.find(',', pos);
      const std::string tok = line.substr(pos, next == std::string::npos
                                                   ? std::string::npos
                                                   : next - pos);
      v[i] = std::stod(tok);
      if (next == std::string::npos && i < 9) {
        throw std::runtime_error("short trace row in " + path.string());
      }
      pos = next + 1;
    }
    TraceRecord r;
    r.t = v[0]; r.z_head = v[1]; r.vz_head = v[2]; r.fz_est = v[3];
    r.fz_true = v[4]; r.l_desired = v[5]; r.l_corrected = v[6];
    r.l_est = v[7]; r.tau_knee = v[8]; r.contact = v[9] != 0.0;
    trace.records.push_back(r);
  }
  if (trace.records.size() >= 2) {
    trace.dt = trace.records[1].t - trace.records[0].t;
  }
  return trace;
}

void write_plot_csv(const SimTrace& trace, const std::filesystem::path& path,
                    int stride) {
  if (stride < 1) throw std::invalid_argument("write_plot_csv: stride >= 1");
  SimTrace down;
  down.dt = trace.dt * stride;
  for (std::size_t i = 0; i < trace.records.size(); i += stride) {
    down.records.push_back(trace.records[i]);
  }
  write_trace_csv(down, path);
}

}  // namespace headstab

#include "octoem/io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace octoem {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

nlohmann::json octon_to_json(const Octon& o) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t k = 0; k < 8; ++k)
    j.push_back({o[k].real(), o[k].imag()});
  return j;
}

Octon octon_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument("octon JSON form must be an array of 8 pairs");
  Octon o;
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& pair = j[k];
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("octon component must be a [re, im] pair");
    o[k] = Complex{pair[0].get<double>(), pair[1].get<double>()};
  }
  return o;
}

void write_snapshot(const std::string& path, const OctonField& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  const std::uint32_t n[3] = {static_cast<std::uint32_t>(f.grid.n[0]),
                              static_cast<std::uint32_t>(f.grid.n[1]),
                              static_cast<std::uint32_t>(f.grid.n[2])};
  os.write(reinterpret_cast<const char*>(n), sizeof n);
  os.write(reinterpret_cast<const char*>(f.grid.h.data()), 3 * sizeof(double));
  for (const Octon& o : f.data) {
    double buf[16];
    for (std::size_t k = 0; k < 8; ++k) {
      buf[2 * k] = o[k].real();
      buf[2 * k + 1] = o[k].imag();
    }
    os.write(reinterpret_cast<const char*>(buf), sizeof buf);
  }
  if (!os) throw std::runtime_error("failed writing " + path);
}

OctonField read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::uint32_t n[3];
  double h[3];
  is.read(reinterpret_cast<char*>(n), sizeof n);
  is.read(reinterpret_cast<char*>(h), sizeof h);
  if (!is) throw std::runtime_error("truncated snapshot header in " + path);
  Grid3 g({static_cast<int>(n[0]), static_cast<int>(n[1]),
           static_cast<int>(n[2])},
          {h[0], h[1], h[2]});
  OctonField f(g);
  for (Octon& o : f.data) {
    double buf[16];
    is.read(reinterpret_cast<char*>(buf), sizeof buf);
    if (!is) throw std::runtime_error("truncated snapshot data in " + path);
    for (std::size_t k = 0; k < 8; ++k)
      o[k] = Complex{buf[2 * k], buf[2 * k + 1]};
  }
  return f;
}

void write_snapshot_sidecar(const std::string& path, const OctonField& f,
                            double time) {
  nlohmann::json j;
  j["format"] = "octoem-snapshot";
  j["version"] = kVersion;
  j["grid"] = {{"n", f.grid.n}, {"h", f.grid.h}, {"origin", f.grid.origin}};
  j["time"] = time;
  j["reals_per_site"] = 16;
  j["component_order"] = {"1", "i", "j", "k", "E", "I", "J", "K"};
  j["channel_order"] = {"re", "im"};
  j["grades"] = {{"scalar", {"1"}},
                 {"vector", {"i", "j", "k"}},
                 {"pseudoscalar", {"E"}},
                 {"pseudovector", {"I", "J", "K"}}};
  write_text_file(path, j.dump(2) + "\n");
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {
void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}
}  // namespace

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records,
                            const ReportMeta& meta) {
  std::string out;
  out += "# octoem diagnostics v";
  out += meta.version;
  out += "\n# config_hash: ";
  out += std::to_string(meta.config_hash);
  out += "\n# seed: ";
  out += std::to_string(meta.seed);
  out += "\n# tolerances: ";
  out += meta.tolerances.is_null() ? "{}" : meta.tolerances.dump();
  out +=
      "\nstep,time,energy,Sx,Sy,Sz,inv1,inv2,res_scalar,res_pseudoscalar,"
      "res_vector,res_pseudovector,continuity,poynting,l2err\n";
  for (const DiagnosticsRecord& r : records) {
    out += std::to_string(r.step);
    const double cols[] = {r.time,     r.energy,          r.momentum[0],
                           r.momentum[1], r.momentum[2],  r.inv1,
                           r.inv2,     r.res_scalar,      r.res_pseudoscalar,
                           r.res_vector, r.res_pseudovector, r.continuity,
                           r.poynting, r.l2_error};
    for (double v : cols) {
      out += ',';
      append_double(out, v);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << content;
  if (!os) throw std::runtime_error("failed writing " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace octoem

#ifndef OCTOEM_IO_HPP
#define OCTOEM_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octoem/grid.hpp"
#include "octoem/solver.hpp"

#include "json.hpp"

namespace octoem {

inline constexpr const char* kVersion = "0.1.0";

/// Octon text form: JSON array of 8 [re, im] pairs in canonical order.
nlohmann::json octon_to_json(const Octon& o);
Octon octon_from_json(const nlohmann::json& j);

/// Field snapshot: little-endian binary, header (nx, ny, nz as u32;
/// hx, hy, hz as f64) followed by 16 doubles per site in storage order.
void write_snapshot(const std::string& path, const OctonField& f);
OctonField read_snapshot(const std::string& path);

/// JSON sidecar describing the snapshot layout and grade labels.
void write_snapshot_sidecar(const std::string& path, const OctonField& f,
                            double time);

/// FNV-1a 64-bit, used as the config hash embedded in reports.
std::uint64_t fnv1a64(std::string_view s);

struct ReportMeta {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  nlohmann::json tolerances;
};

/// Diagnostics CSV with a reproducibility preamble and the fixed column
/// order (step, time, energy, Sx, Sy, Sz, inv1, inv2, res_scalar,
/// res_pseudoscalar, res_vector, res_pseudovector, continuity, poynting,
/// l2err). Doubles are printed round-trippably, so identical runs give
/// byte-identical output.
std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records,
                            const ReportMeta& meta);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace octoem

#endif  // OCTOEM_IO_HPP

#ifndef OCTOEM_IDENTITIES_HPP
#define OCTOEM_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "octoem/matter.hpp"
#include "octoem/scenarios.hpp"
#include "octoem/solver.hpp"

#include "json.hpp"

namespace octoem {

/// Norm of one residual quantity across refinement levels together with
/// the fitted convergence order. Quantities that sit at the roundoff
/// floor on every level are classified exact instead of fitted.
struct ConvergenceSeries {
  std::string name;
  std::vector<double> norms;  ///< one per level, coarse to fine
  double order = 0.0;         ///< least-squares slope in refinement steps
  bool exact = false;         ///< all norms at or below the floor
};

/// Least-squares slope of log2(norm) against refinement step (levels are
/// successive halvings of h).
double fit_order(const std::vector<double>& norms);

ConvergenceSeries make_series(std::string name, std::vector<double> norms,
                              double exact_floor);

struct IdentityEntry {
  std::string name;
  enum class Kind { Order, Agreement, Exact, NonConvergent } kind;
  std::vector<double> values;
  double order = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct IdentityOptions {
  std::vector<int> levels{16, 32, 64};
  std::uint64_t seed = 1;
  double epsilon = 2.0;  ///< matter study
  double mu = 3.0;
  UnitsConfig units{};
  double min_order = 1.8;
  double max_order = 1e9;         ///< acceptance narrows this to 2.2
  double exact_floor = 1e-9;
  double agreement_tol_linear = 1e-12;
  double agreement_tol_quadratic = 1e-11;
};

struct IdentityReport {
  std::vector<IdentityEntry> entries;
  IdentityOptions options;

  bool pass() const;
  std::string summary() const;
  nlohmann::json to_json() const;
};

// Shared analytic scenarios.
PlaneWaveEM vacuum_plane_wave(const Vec3& box, double c);
PlaneWaveEM two_plane_waves(const Vec3& box, double c);
PlaneWaveEM matter_plane_wave(const Vec3& box, double c, double epsilon,
                              double mu);

EMSlice sample_em_slice(const PlaneWaveEM& w, const Grid3& g, double t);
EMSlice2 sample_em_slice2(const PlaneWaveEM& w, const Grid3& g, double t);
MatterSlice sample_matter_slice(const PlaneWaveEM& w, const Grid3& g, double t);

/// Smooth analytic potential probe with every derivative available.
struct PotentialProbe {
  AnalyticScalar phi;
  AnalyticVec3 A;

  PotentialSlice2 sample(const Grid3& g, double t) const;
  OctonField sample_wave_image(const Grid3& g, double t, double c) const;
};
PotentialProbe standard_potential_probe(const Vec3& box);

// Individual studies; each returns entries appended to a report.
std::vector<IdentityEntry> operator_composition_study(const IdentityOptions&);
std::vector<IdentityEntry> potentials_to_fields_study(const IdentityOptions&);
std::vector<IdentityEntry> maxwell_study(const IdentityOptions&);
std::vector<IdentityEntry> relations_study(const IdentityOptions&);
std::vector<IdentityEntry> wave_sign_study(const IdentityOptions&);
std::vector<IdentityEntry> matter_study(const IdentityOptions&);

/// Runs every residual operation over the refinement levels and fits
/// observed orders; the union of all studies above.
IdentityReport check_identities(const IdentityOptions& opt = {});

/// Residual norms of every relation at one grid level, as the report
/// object {relation_name: {linf, l2}}.
nlohmann::json residual_report(const IdentityOptions& opt, int level);

// Solver refinement study (used by the convergence subcommand and the
// acceptance suite).
struct SolverLevelResult {
  int n = 0;
  int steps = 0;
  double dt = 0.0;
  double cfl = 0.0;
  double rms_error = 0.0;      ///< per-component RMS vs analytic, final step
  double rel_l2_error = 0.0;   ///< |err| / |ref|, final step
  double max_rms_error = 0.0;  ///< max over samples
  double energy_drift = 0.0;   ///< max |E(t)-E(0)| / E(0)
  double initial_div_h = 0.0;
  double max_div_h = 0.0;
  double max_inv1 = 0.0, max_inv2 = 0.0;
  std::vector<DiagnosticsRecord> records;
};

SolverLevelResult plane_wave_solver_level(int n, double cfl_factor,
                                          const UnitsConfig& units,
                                          double periods = 1.0,
                                          int sample_interval = 1);

}  // namespace octoem

#endif  // OCTOEM_IDENTITIES_HPP

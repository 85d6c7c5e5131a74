#ifndef OCTOEM_SOLVER_HPP
#define OCTOEM_SOLVER_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octoem/electrodynamics.hpp"
#include "octoem/scenarios.hpp"

namespace octoem {

enum class ScenarioKind { PlaneWave, GaussianPulse, StaticLinear, Custom };

/// Analytic source sampled on the grid: charge and current density as
/// functions of position and time.
struct SourceSpec {
  std::function<double(const Vec3&, double)> rho;
  std::function<double(const Vec3&, double)> drho_dt;
  std::function<Vec3(const Vec3&, double)> j;

  bool empty() const { return !rho && !j; }
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::PlaneWave;

  // PLANE_WAVE: superposition of exact monochromatic solutions.
  std::vector<PlaneWaveComponent> waves{PlaneWaveComponent{}};

  // GAUSSIAN_PULSE: right-moving pulse along z.
  double pulse_amplitude = 1.0;
  double pulse_width = 0.0;
  double pulse_center = 0.5;

  // STATIC_LINEAR: E = alpha (x, y, z), rho = 3 alpha / 4 pi, H = 0.
  double linear_coeff = 1.0;

  // Medium for identity checks; the time stepper itself evolves the
  // vacuum system.
  double epsilon = 1.0;
  double mu = 1.0;

  SourceSpec source;

  // CUSTOM initial fields.
  std::function<Vec3(const Vec3&)> custom_E;
  std::function<Vec3(const Vec3&)> custom_H;
};

struct SolverState {
  Vec3Field E, H;
  double time = 0.0;
  int step = 0;
};

/// Analytic reference solution attached by init_scenario when one exists.
using ReferenceSolution = std::function<void(double t, Vec3Field& E, Vec3Field& H)>;

struct ScenarioState {
  SolverState state;
  SourceSpec source;
  std::optional<ReferenceSolution> reference;
  std::shared_ptr<PlaneWaveEM> wave;  ///< kept for identity studies
  double amplitude = 1.0;
};

ScenarioState init_scenario(const Scenario& s, const Grid3& g,
                            const UnitsConfig& units);

struct SolverConfig {
  double dt = 0.0;            ///< 0: use 0.25 * min(h) / c
  int steps = 0;
  double cfl_limit = 0.5;
  bool allow_high_cfl = false;
  int sample_interval = 1;
  int snapshot_cadence = 0;   ///< 0: no snapshots
  std::string snapshot_prefix;
};

double cfl_number(const Grid3& g, double dt, double c);
double default_dt(const Grid3& g, double c);

/// Raised when the state leaves the finite range.
struct SolverAbort : std::runtime_error {
  int step;
  explicit SolverAbort(int step_)
      : std::runtime_error("solver aborted: non-finite field values at step " +
                           std::to_string(step_)),
        step(step_) {}
};

struct DiagnosticsRecord {
  int step = 0;
  double time = 0.0;
  double energy = 0.0;
  Vec3 momentum{0.0, 0.0, 0.0};  ///< integral of (c/4pi) E x H
  double inv1 = 0.0, inv2 = 0.0;
  double res_scalar = 0.0, res_pseudoscalar = 0.0;
  double res_vector = 0.0, res_pseudovector = 0.0;
  double continuity = 0.0;
  double poynting = 0.0;
  double l2_error = 0.0;  ///< per-component RMS vs the analytic reference
};

/// dE/dt = c rot H - 4 pi j,  dH/dt = -c rot E, the vector and
/// pseudovector grades of the octonic Maxwell equation solved for the
/// time derivatives; rot comes out of the octonic differentiation.
/// The divergence grades are not evolved, only monitored.
struct RhsWorkspace {
  NablaWorkspace nabla;
  Vec3Field rotE, rotH;
  ScalarField divE, divH;
  Vec3Field j;
};

void solver_rhs(const Vec3Field& E, const Vec3Field& H, double t,
                const SourceSpec& source, const UnitsConfig& units,
                Vec3Field& dE, Vec3Field& dH, RhsWorkspace& ws);

/// One classic RK4 step; deterministic.
void step(SolverState& state, const SolverConfig& cfg, const SourceSpec& source,
          const UnitsConfig& units);

struct RunResult {
  std::vector<DiagnosticsRecord> records;
  SolverState final_state;
  double initial_div_h_l2 = 0.0;
  double max_div_h_l2 = 0.0;
};

/// Steps the scenario, emitting one DiagnosticsRecord per sample
/// interval; on_snapshot fires every snapshot_cadence steps when the
/// cadence is positive.
RunResult run(const Scenario& scenario, const Grid3& g, const SolverConfig& cfg,
              const UnitsConfig& units,
              const std::function<void(const SolverState&)>& on_snapshot = {});

/// Per-component RMS over all six field channels against a reference.
double state_rms_error(const SolverState& state, const Vec3Field& refE,
                       const Vec3Field& refH);
/// Relative L2 error |err| / |ref| over the same channels.
double state_rel_l2_error(const SolverState& state, const Vec3Field& refE,
                          const Vec3Field& refH);

}  // namespace octoem

#endif  // OCTOEM_SOLVER_HPP

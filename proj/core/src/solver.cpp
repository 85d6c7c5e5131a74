#include "octoem/solver.hpp"

#include <cmath>
#include <numbers>

namespace octoem {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

double cfl_number(const Grid3& g, double dt, double c) {
  const double s = std::sqrt(1.0 / (g.h[0] * g.h[0]) + 1.0 / (g.h[1] * g.h[1]) +
                             1.0 / (g.h[2] * g.h[2]));
  return std::abs(dt) * c * s;
}

double default_dt(const Grid3& g, double c) { return 0.25 * g.min_spacing() / c; }

ScenarioState init_scenario(const Scenario& s, const Grid3& g,
                            const UnitsConfig& units) {
  ScenarioState out;
  out.source = s.source;
  switch (s.kind) {
    case ScenarioKind::PlaneWave: {
      auto wave = std::make_shared<PlaneWaveEM>(s.waves, g.length(), units.c,
                                                s.epsilon, s.mu);
      out.wave = wave;
      out.amplitude = wave->max_amplitude();
      out.state.E = sample<Vec3>(g, [&](double x, double y, double z) {
        return wave->E({x, y, z}, 0.0);
      });
      out.state.H = sample<Vec3>(g, [&](double x, double y, double z) {
        return wave->H({x, y, z}, 0.0);
      });
      if (s.epsilon == 1.0 && s.mu == 1.0 && s.source.empty()) {
        out.reference = [wave, g](double t, Vec3Field& E, Vec3Field& H) {
          E = sample<Vec3>(g, [&](double x, double y, double z) {
            return wave->E({x, y, z}, t);
          });
          H = sample<Vec3>(g, [&](double x, double y, double z) {
            return wave->H({x, y, z}, t);
          });
        };
      }
      break;
    }
    case ScenarioKind::GaussianPulse: {
      if (!(s.pulse_width > 0.0))
        throw std::invalid_argument("init_scenario: pulse width must be positive");
      if (s.pulse_width < 4.0 * g.min_spacing())
        throw std::invalid_argument(
            "init_scenario: pulse width under-resolved (< 4 grid spacings)");
      const double z0 = s.pulse_center;
      const double a = s.pulse_amplitude;
      const double sig = s.pulse_width;
      out.amplitude = a;
      auto prof = [=](double z) {
        const double d = z - z0;
        return a * std::exp(-d * d / (2.0 * sig * sig));
      };
      out.state.E = sample<Vec3>(g, [&](double, double, double z) {
        return Vec3{prof(z), 0.0, 0.0};
      });
      out.state.H = sample<Vec3>(g, [&](double, double, double z) {
        return Vec3{0.0, prof(z), 0.0};
      });
      break;
    }
    case ScenarioKind::StaticLinear: {
      const double a = s.linear_coeff;
      out.amplitude = a;
      out.state.E = sample<Vec3>(g, [&](double x, double y, double z) {
        return Vec3{a * x, a * y, a * z};
      });
      out.state.H = Vec3Field(g, Vec3{0.0, 0.0, 0.0});
      if (out.source.empty()) {
        out.source.rho = [a](const Vec3&, double) {
          return 3.0 * a / kFourPi;
        };
      }
      break;
    }
    case ScenarioKind::Custom: {
      if (!s.custom_E || !s.custom_H)
        throw std::invalid_argument(
            "init_scenario: custom scenario requires both field functions");
      out.state.E = sample<Vec3>(g, [&](double x, double y, double z) {
        return s.custom_E({x, y, z});
      });
      out.state.H = sample<Vec3>(g, [&](double x, double y, double z) {
        return s.custom_H({x, y, z});
      });
      break;
    }
  }
  out.state.time = 0.0;
  out.state.step = 0;
  return out;
}

namespace {

void sample_current(const SourceSpec& source, const Grid3& g, double t,
                    Vec3Field& j) {
  if (!(j.grid == g)) {
    j.grid = g;
    j.data.assign(g.size(), Vec3{0.0, 0.0, 0.0});
  }
  if (!source.j) {
    for (auto& v : j.data) v = Vec3{0.0, 0.0, 0.0};
    return;
  }
  for (int i = 0; i < g.n[0]; ++i)
    for (int jj = 0; jj < g.n[1]; ++jj)
      for (int k = 0; k < g.n[2]; ++k)
        j.at(i, jj, k) = source.j(g.position(i, jj, k), t);
}

}  // namespace

void solver_rhs(const Vec3Field& E, const Vec3Field& H, double t,
                const SourceSpec& source, const UnitsConfig& units,
                Vec3Field& dE, Vec3Field& dH, RhsWorkspace& ws) {
  octonic_vector_analysis_into(H, /*axial=*/true, ws.divH, ws.rotH, ws.nabla);
  octonic_vector_analysis_into(E, /*axial=*/false, ws.divE, ws.rotE, ws.nabla);
  sample_current(source, E.grid, t, ws.j);

  const Grid3& g = E.grid;
  if (!(dE.grid == g)) {
    dE.grid = g;
    dE.data.assign(g.size(), Vec3{0.0, 0.0, 0.0});
  }
  if (!(dH.grid == g)) {
    dH.grid = g;
    dH.data.assign(g.size(), Vec3{0.0, 0.0, 0.0});
  }
  const double c = units.c;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (std::size_t m = 0; m < 3; ++m) {
      dE[s][m] = c * ws.rotH[s][m] - kFourPi * ws.j[s][m];
      dH[s][m] = -c * ws.rotE[s][m];
    }
  }
}

namespace {

/// RK4 stepper with persistent buffers. The stage-1 evaluation is split
/// out so diagnostics can reuse its byproducts (curls, divergences).
class Stepper {
 public:
  explicit Stepper(const Grid3& g)
      : k1E(g), k1H(g), kE(g), kH(g), accE(g), accH(g), tmpE(g), tmpH(g) {}

  void eval_stage1(const SolverState& st, const SourceSpec& source,
                   const UnitsConfig& units) {
    solver_rhs(st.E, st.H, st.time, source, units, k1E, k1H, ws);
  }

  /// Completes one RK4 step; eval_stage1 must have been called for the
  /// current state.
  void finish_step(SolverState& st, double dt, const SourceSpec& source,
                   const UnitsConfig& units) {
    const Grid3& g = st.E.grid;
    const std::size_t n = g.size();

    // acc = k1
    for (std::size_t s = 0; s < n; ++s) {
      accE[s] = k1E[s];
      accH[s] = k1H[s];
    }
    // stage 2
    stage_state(st, k1E, k1H, 0.5 * dt);
    solver_rhs(tmpE, tmpH, st.time + 0.5 * dt, source, units, kE, kH, ws);
    accumulate(2.0);
    // stage 3
    stage_state(st, kE, kH, 0.5 * dt);
    solver_rhs(tmpE, tmpH, st.time + 0.5 * dt, source, units, kE, kH, ws);
    accumulate(2.0);
    // stage 4
    stage_state(st, kE, kH, dt);
    solver_rhs(tmpE, tmpH, st.time + dt, source, units, kE, kH, ws);
    accumulate(1.0);

    const double w = dt / 6.0;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t m = 0; m < 3; ++m) {
        st.E[s][m] += w * accE[s][m];
        st.H[s][m] += w * accH[s][m];
      }
    }
    st.time += dt;
    st.step += 1;
    if (!all_finite(st.E) || !all_finite(st.H)) throw SolverAbort(st.step);
  }

  RhsWorkspace ws;
  Vec3Field k1E, k1H;

 private:
  void stage_state(const SolverState& st, const Vec3Field& dE,
                   const Vec3Field& dH, double a) {
    const std::size_t n = st.E.size();
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t m = 0; m < 3; ++m) {
        tmpE[s][m] = st.E[s][m] + a * dE[s][m];
        tmpH[s][m] = st.H[s][m] + a * dH[s][m];
      }
    }
  }

  void accumulate(double w) {
    const std::size_t n = accE.size();
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t m = 0; m < 3; ++m) {
        accE[s][m] += w * kE[s][m];
        accH[s][m] += w * kH[s][m];
      }
    }
  }

  Vec3Field kE, kH, accE, accH, tmpE, tmpH;
};

void check_cfl(const Grid3& g, const SolverConfig& cfg, double dt,
               const UnitsConfig& units) {
  const double cfl = cfl_number(g, dt, units.c);
  if (cfl > cfg.cfl_limit && !cfg.allow_high_cfl)
    throw std::invalid_argument("step: cfl " + std::to_string(cfl) +
                                " exceeds limit " +
                                std::to_string(cfg.cfl_limit) +
                                " (use allow_high_cfl to override)");
}

}  // namespace

void step(SolverState& state, const SolverConfig& cfg, const SourceSpec& source,
          const UnitsConfig& units) {
  const double dt =
      cfg.dt != 0.0 ? cfg.dt : default_dt(state.E.grid, units.c);
  check_cfl(state.E.grid, cfg, dt, units);
  Stepper st(state.E.grid);
  st.eval_stage1(state, source, units);
  st.finish_step(state, dt, source, units);
}

double state_rms_error(const SolverState& state, const Vec3Field& refE,
                       const Vec3Field& refH) {
  double sumsq = 0.0;
  const std::size_t n = state.E.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t m = 0; m < 3; ++m) {
      const double de = state.E[s][m] - refE[s][m];
      const double dh = state.H[s][m] - refH[s][m];
      sumsq += de * de + dh * dh;
    }
  }
  return std::sqrt(sumsq / (6.0 * static_cast<double>(n)));
}

double state_rel_l2_error(const SolverState& state, const Vec3Field& refE,
                          const Vec3Field& refH) {
  double err = 0.0, ref = 0.0;
  const std::size_t n = state.E.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t m = 0; m < 3; ++m) {
      const double de = state.E[s][m] - refE[s][m];
      const double dh = state.H[s][m] - refH[s][m];
      err += de * de + dh * dh;
      ref += refE[s][m] * refE[s][m] + refH[s][m] * refH[s][m];
    }
  }
  return ref > 0.0 ? std::sqrt(err / ref) : std::sqrt(err);
}

namespace {

DiagnosticsRecord make_record(const SolverState& st, Stepper& stepper,
                              const SourceSpec& source,
                              const std::optional<ReferenceSolution>& reference,
                              const UnitsConfig& units, Vec3Field& refE,
                              Vec3Field& refH) {
  DiagnosticsRecord rec;
  rec.step = st.step;
  rec.time = st.time;

  const InvariantFields inv = invariant_scalars({st.E, st.H}, units);
  rec.energy = integrate(inv.energy);
  rec.momentum = integrate(inv.poynting);
  rec.inv1 = integrate(inv.inv1);
  rec.inv2 = integrate(inv.inv2);

  const RhsWorkspace& ws = stepper.ws;
  const Grid3& g = st.E.grid;
  const double c = units.c;

  // Constraint grades of the octonic Maxwell equation.
  ScalarField gauss(g);
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        const double rho =
            source.rho ? source.rho(g.position(i, j, k), st.time) : 0.0;
        gauss.at(i, j, k) = ws.divE.at(i, j, k) - kFourPi * rho;
      }
  rec.res_scalar = scalar_norms(gauss).l2;
  rec.res_pseudoscalar = scalar_norms(ws.divH).l2;

  // Evolved grades, with the discrete time derivative substituted back.
  Vec3Field vres(g);
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t m = 0; m < 3; ++m)
      vres[s][m] = ws.rotH[s][m] - stepper.k1E[s][m] / c -
                   (kFourPi / c) * ws.j[s][m];
  rec.res_vector = vec3_norms(vres).l2;
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t m = 0; m < 3; ++m)
      vres[s][m] = ws.rotE[s][m] + stepper.k1H[s][m] / c;
  rec.res_pseudovector = vec3_norms(vres).l2;

  // Poynting balance with the discrete derivatives.
  ScalarField poy(g);
  for (std::size_t s = 0; s < g.size(); ++s) {
    double edot = 0.0, hdot = 0.0, je = 0.0, flux = 0.0;
    for (std::size_t m = 0; m < 3; ++m) {
      edot += st.E[s][m] * stepper.k1E[s][m];
      hdot += st.H[s][m] * stepper.k1H[s][m];
      je += ws.j[s][m] * st.E[s][m];
      flux += st.H[s][m] * ws.rotE[s][m] - st.E[s][m] * ws.rotH[s][m];
    }
    poy[s] = (edot + hdot) / kFourPi + (c / kFourPi) * flux + je;
  }
  rec.poynting = scalar_norms(poy).l2;

  // Continuity of the analytic source.
  if (source.j && source.drho_dt) {
    Vec3Field j(g);
    sample_current(source, g, st.time, j);
    ScalarField cont = divergence(j);
    for (int i = 0; i < g.n[0]; ++i)
      for (int jj = 0; jj < g.n[1]; ++jj)
        for (int k = 0; k < g.n[2]; ++k)
          cont.at(i, jj, k) += source.drho_dt(g.position(i, jj, k), st.time);
    rec.continuity = scalar_norms(cont).l2;
  }

  if (reference) {
    (*reference)(st.time, refE, refH);
    rec.l2_error = state_rms_error(st, refE, refH);
  }
  return rec;
}

}  // namespace

RunResult run(const Scenario& scenario, const Grid3& g, const SolverConfig& cfg,
              const UnitsConfig& units,
              const std::function<void(const SolverState&)>& on_snapshot) {
  ScenarioState sc = init_scenario(scenario, g, units);
  SolverConfig local = cfg;
  if (local.dt == 0.0) local.dt = default_dt(g, units.c);
  if (local.steps < 0) throw std::invalid_argument("run: steps must be >= 0");
  if (local.sample_interval < 1) local.sample_interval = 1;
  check_cfl(g, local, local.dt, units);

  Stepper stepper(g);
  RunResult out;
  Vec3Field refE, refH;

  for (int s = 0;; ++s) {
    stepper.eval_stage1(sc.state, sc.source, units);
    const double divh = scalar_norms(stepper.ws.divH).l2;
    if (s == 0) out.initial_div_h_l2 = divh;
    out.max_div_h_l2 = std::max(out.max_div_h_l2, divh);
    if (s % local.sample_interval == 0 || s == local.steps) {
      out.records.push_back(make_record(sc.state, stepper, sc.source,
                                        sc.reference, units, refE, refH));
    }
    if (on_snapshot && local.snapshot_cadence > 0 &&
        s % local.snapshot_cadence == 0) {
      on_snapshot(sc.state);
    }
    if (s == local.steps) break;
    stepper.finish_step(sc.state, local.dt, sc.source, units);
  }
  out.final_state = std::move(sc.state);
  return out;
}

}  // namespace octoem

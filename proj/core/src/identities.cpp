#include "octoem/identities.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace octoem {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kProbeTime = 0.13;  // generic phase for sampled slices
}  // namespace

double fit_order(const std::vector<double>& norms) {
  // log2(r_i) ~ a - p * i; least squares for p.
  const std::size_t n = norms.size();
  if (n < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    const double y = std::log2(std::max(norms[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  return -(n * sxy - sx * sy) / denom;
}

ConvergenceSeries make_series(std::string name, std::vector<double> norms,
                              double exact_floor) {
  ConvergenceSeries s;
  s.name = std::move(name);
  s.norms = std::move(norms);
  s.exact = true;
  for (double v : s.norms)
    if (v > exact_floor) s.exact = false;
  if (!s.exact) s.order = fit_order(s.norms);
  return s;
}

bool IdentityReport::pass() const {
  for (const IdentityEntry& e : entries)
    if (!e.pass) return false;
  return true;
}

std::string IdentityReport::summary() const {
  std::ostringstream os;
  os.precision(3);
  for (const IdentityEntry& e : entries) {
    os << (e.pass ? "  ok  " : " FAIL ") << e.name;
    switch (e.kind) {
      case IdentityEntry::Kind::Order:
        os << "  order " << e.order << "  norms [";
        for (std::size_t i = 0; i < e.values.size(); ++i)
          os << (i ? ", " : "") << e.values[i];
        os << "]";
        break;
      case IdentityEntry::Kind::Agreement:
        os << "  max discrepancy " << (e.values.empty() ? 0.0 : e.values[0])
           << " (tol " << e.tolerance << ")";
        break;
      case IdentityEntry::Kind::Exact:
        os << "  exact (max " << (e.values.empty() ? 0.0 : e.values[0]) << ")";
        break;
      case IdentityEntry::Kind::NonConvergent:
        os << "  non-convergent as required, order " << e.order << "  norms [";
        for (std::size_t i = 0; i < e.values.size(); ++i)
          os << (i ? ", " : "") << e.values[i];
        os << "]";
        break;
    }
    if (!e.detail.empty()) os << "  - " << e.detail;
    os << "\n";
  }
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json j;
  j["levels"] = options.levels;
  j["seed"] = options.seed;
  j["epsilon"] = options.epsilon;
  j["mu"] = options.mu;
  j["pass"] = pass();
  j["entries"] = nlohmann::json::array();
  for (const IdentityEntry& e : entries) {
    const char* kind = e.kind == IdentityEntry::Kind::Order ? "order"
                       : e.kind == IdentityEntry::Kind::Agreement
                           ? "agreement"
                       : e.kind == IdentityEntry::Kind::Exact ? "exact"
                                                              : "nonconvergent";
    j["entries"].push_back({{"name", e.name},
                            {"kind", kind},
                            {"values", e.values},
                            {"order", e.order},
                            {"tolerance", e.tolerance},
                            {"pass", e.pass},
                            {"detail", e.detail}});
  }
  return j;
}

PlaneWaveEM vacuum_plane_wave(const Vec3& box, double c) {
  return PlaneWaveEM({PlaneWaveComponent{1.0, {0, 0, 1}, {1.0, 0.0, 0.0}, 0.0}},
                     box, c);
}

PlaneWaveEM two_plane_waves(const Vec3& box, double c) {
  // Two waves with skew polarizations make every quadratic-relation residual
  // nonzero at finite h; a single linear wave leaves most of them
  // identically zero, and axis-aligned polarizations still cancel the
  // pointwise E^2 - H^2.
  return PlaneWaveEM(
      {PlaneWaveComponent{1.0, {0, 0, 1}, {1.0, 0.0, 0.0}, 0.2},
       PlaneWaveComponent{0.7, {1, 0, 0}, {0.0, 0.6, 0.8}, 1.1}},
      box, c);
}

PlaneWaveEM matter_plane_wave(const Vec3& box, double c, double epsilon,
                              double mu) {
  return PlaneWaveEM({PlaneWaveComponent{1.0, {0, 0, 1}, {1.0, 0.0, 0.0}, 0.4}},
                     box, c, epsilon, mu);
}

EMSlice sample_em_slice(const PlaneWaveEM& w, const Grid3& g, double t) {
  EMSlice s;
  s.value.E = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.E({x, y, z}, t);
  });
  s.value.H = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.H({x, y, z}, t);
  });
  s.dt.E = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dtE({x, y, z}, t);
  });
  s.dt.H = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dtH({x, y, z}, t);
  });
  return s;
}

EMSlice2 sample_em_slice2(const PlaneWaveEM& w, const Grid3& g, double t) {
  EMSlice2 s;
  const EMSlice base = sample_em_slice(w, g, t);
  s.value = base.value;
  s.dt = base.dt;
  s.dtt.E = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dttE({x, y, z}, t);
  });
  s.dtt.H = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dttH({x, y, z}, t);
  });
  return s;
}

MatterSlice sample_matter_slice(const PlaneWaveEM& w, const Grid3& g, double t) {
  MatterSlice s;
  s.value.E = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.E({x, y, z}, t);
  });
  s.value.H = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.H({x, y, z}, t);
  });
  s.value.D = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.D({x, y, z}, t);
  });
  s.value.B = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.B({x, y, z}, t);
  });
  s.dt.E = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dtE({x, y, z}, t);
  });
  s.dt.H = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dtH({x, y, z}, t);
  });
  s.dt.D = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dtD({x, y, z}, t);
  });
  s.dt.B = sample<Vec3>(g, [&](double x, double y, double z) {
    return w.dtB({x, y, z}, t);
  });
  return s;
}

PotentialSlice2 PotentialProbe::sample(const Grid3& g, double t) const {
  PotentialSlice2 s;
  s.value.phi = sample_value(g, phi, t);
  s.value.A = sample_value(g, A, t);
  s.dt.phi = sample_dt(g, phi, t);
  s.dt.A = sample_dt(g, A, t);
  s.dtt.phi = octoem::sample<double>(g, [&](double x, double y, double z) {
    return phi.dtt({x, y, z}, t);
  });
  s.dtt.A = sample_dtt(g, A, t);
  return s;
}

OctonField PotentialProbe::sample_wave_image(const Grid3& g, double t,
                                             double c) const {
  // ((1/c^2) dtt - Lap) Pi with exact derivatives.
  OctonField out(g);
  const double ic2 = 1.0 / (c * c);
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        const Vec3 x = g.position(i, j, k);
        Octon& o = out.at(i, j, k);
        o[0] = Complex{ic2 * phi.dtt(x, t) - phi.laplacian(x, t), 0.0};
        for (std::size_t m = 0; m < 3; ++m)
          o[1 + m] = Complex{
              ic2 * A.comp[m].dtt(x, t) - A.comp[m].laplacian(x, t), 0.0};
      }
  return out;
}

PotentialProbe standard_potential_probe(const Vec3& box) {
  PotentialProbe p;
  auto k = [&](int mx, int my, int mz) {
    return Vec3{kTwoPi * mx / box[0], kTwoPi * my / box[1],
                kTwoPi * mz / box[2]};
  };
  p.phi.terms = {{0.8, k(1, 0, 0), 0.3, 1.1, 0.2},
                 {0.5, k(0, 1, 1), 1.2, 0.7, 0.9}};
  p.A.comp[0].terms = {{0.9, k(0, 0, 1), 0.1, 0.9, 0.4}};
  p.A.comp[1].terms = {{0.6, k(1, 1, 0), 0.7, 1.3, 0.1}};
  p.A.comp[2].terms = {{0.7, k(0, 1, 0), 1.9, 0.5, 1.5}};
  return p;
}

namespace {

IdentityEntry order_entry(const IdentityOptions& opt, const ConvergenceSeries& s,
                          const std::string& detail = "") {
  IdentityEntry e;
  e.name = s.name;
  e.values = s.norms;
  e.detail = detail;
  if (s.exact) {
    e.kind = IdentityEntry::Kind::Exact;
    e.pass = true;
    double mx = 0.0;
    for (double v : s.norms) mx = std::max(mx, v);
    e.values = {mx};
    e.tolerance = opt.exact_floor;
  } else {
    e.kind = IdentityEntry::Kind::Order;
    e.order = s.order;
    e.pass = s.order >= opt.min_order && s.order <= opt.max_order;
  }
  return e;
}

IdentityEntry agreement_entry(std::string name, double value, double tol) {
  IdentityEntry e;
  e.name = std::move(name);
  e.kind = IdentityEntry::Kind::Agreement;
  e.values = {value};
  e.tolerance = tol;
  e.pass = value <= tol;
  return e;
}

Grid3 level_grid(int n) { return Grid3::cube(n, 1.0); }

}  // namespace

std::vector<IdentityEntry> operator_composition_study(const IdentityOptions& opt) {
  const double c = opt.units.c;
  const PotentialProbe probe = standard_potential_probe({1.0, 1.0, 1.0});
  std::vector<double> compose_norms, dropped_norms;
  for (int n : opt.levels) {
    const Grid3 g = level_grid(n);
    const PotentialSlice2 pot = probe.sample(g, kProbeTime);
    const CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
    const GeneralizedEquationResiduals r =
        generalized_equation_residual(pot, cur, opt.units);
    const OctonField wave_exact = probe.sample_wave_image(g, kProbeTime, c);
    compose_norms.push_back(field_norms(field_sub(r.composed, wave_exact)).linf);
    dropped_norms.push_back(field_norms(r.dropped).linf);
  }
  std::vector<IdentityEntry> out;
  out.push_back(order_entry(
      opt, make_series("p_conj . p_apply vs continuum wave operator",
                       compose_norms, opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("retained [nabla,nabla] term", dropped_norms,
                       opt.exact_floor)));
  return out;
}

std::vector<IdentityEntry> potentials_to_fields_study(const IdentityOptions& opt) {
  std::vector<IdentityEntry> out;
  const Grid3 g = level_grid(opt.levels.empty() ? 16 : opt.levels.front());
  const PotentialProbe probe = standard_potential_probe({1.0, 1.0, 1.0});
  const PotentialSlice2 pot = probe.sample(g, kProbeTime);
  const FieldFromPotentials f =
      field_from_potentials(pot.value, pot.dt, opt.units);
  out.push_back(agreement_entry("field_from_potentials octonic vs classical",
                                f.octonic_defect, opt.agreement_tol_linear));
  return out;
}

std::vector<IdentityEntry> maxwell_study(const IdentityOptions& opt) {
  std::vector<IdentityEntry> out;

  // Path agreement on random smooth fields.
  {
    const Grid3 g = level_grid(16);
    const RandomEMData d = random_em_data(g, opt.seed);
    const EMSlice slice{{d.E, d.H}, {d.dtE, d.dtH}};
    const CurrentField cur{d.rho, d.j};
    const MaxwellResiduals r = maxwell_residual(slice, cur, opt.units);
    out.push_back(agreement_entry(
        "Maxwell grade split vs classical residuals (random fields)",
        r.path_defect, opt.agreement_tol_linear));
  }

  // Plane-wave convergence per grade.
  const PlaneWaveEM wave = vacuum_plane_wave({1.0, 1.0, 1.0}, opt.units.c);
  std::vector<double> gauss, ampere, divh, faraday;
  for (int n : opt.levels) {
    const Grid3 g = level_grid(n);
    const EMSlice slice = sample_em_slice(wave, g, kProbeTime);
    const CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
    const MaxwellResiduals r = maxwell_residual(slice, cur, opt.units);
    const RelationNorms norms = norms_of(r.residuals);
    gauss.push_back(norms.scalar.linf);
    ampere.push_back(norms.vector.linf);
    divh.push_back(norms.pseudoscalar.linf);
    faraday.push_back(norms.pseudovector.linf);
  }
  out.push_back(order_entry(
      opt, make_series("Maxwell scalar grade (Gauss), plane wave", gauss,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("Maxwell vector grade (Ampere), plane wave", ampere,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("Maxwell pseudoscalar grade (div H), plane wave", divh,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("Maxwell pseudovector grade (Faraday), plane wave",
                       faraday, opt.exact_floor)));
  return out;
}

std::vector<IdentityEntry> relations_study(const IdentityOptions& opt) {
  std::vector<IdentityEntry> out;

  // Dual-path agreement on random smooth fields.
  {
    const Grid3 g = level_grid(16);
    const RandomEMData d = random_em_data(g, opt.seed + 7);
    const EMSlice slice{{d.E, d.H}, {d.dtE, d.dtH}};
    const CurrentField cur{d.rho, d.j};
    const DualPathResiduals p = power_relations_paths(slice, cur, opt.units);
    out.push_back(agreement_entry(
        "power relations octonic vs classical (random fields)",
        p.agreement, opt.agreement_tol_quadratic * p.scale));
    const DualPathResiduals l =
        lorentz_invariant_relations_paths(slice, cur, opt.units);
    out.push_back(agreement_entry(
        "Lorentz invariant relations octonic vs classical (random fields)",
        l.agreement, opt.agreement_tol_quadratic * l.scale));
  }

  // On-shell convergence of all eight relations.
  const PlaneWaveEM wave = two_plane_waves({1.0, 1.0, 1.0}, opt.units.c);
  std::vector<double> n57, n59, n61, n63, n67, n69, n71, n73;
  for (int n : opt.levels) {
    const Grid3 g = level_grid(n);
    const EMSlice slice = sample_em_slice(wave, g, kProbeTime);
    const CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
    const RelationResiduals p = power_relations(slice, cur, opt.units);
    const RelationResiduals l =
        lorentz_invariant_relations(slice, cur, opt.units);
    n57.push_back(scalar_norms(p.scalar).linf);
    n59.push_back(scalar_norms(p.pseudoscalar).linf);
    n61.push_back(vec3_norms(p.vector).linf);
    n63.push_back(vec3_norms(p.pseudovector).linf);
    n67.push_back(scalar_norms(l.scalar).linf);
    n69.push_back(scalar_norms(l.pseudoscalar).linf);
    n71.push_back(vec3_norms(l.vector).linf);
    n73.push_back(vec3_norms(l.pseudovector).linf);
  }
  out.push_back(order_entry(
      opt, make_series("Poynting theorem residual, plane waves", n57,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("Poynting corollary residual, plane waves", n59,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("momentum relation residual, plane waves", n61,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("pseudovector relation residual, plane waves", n63,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("first Lorentz invariant residual, plane waves", n67,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("second Lorentz invariant residual, plane waves", n69,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("first invariant gradient residual, plane waves", n71,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("second invariant gradient residual, plane waves", n73,
                       opt.exact_floor)));
  return out;
}

std::vector<IdentityEntry> wave_sign_study(const IdentityOptions& opt) {
  std::vector<IdentityEntry> out;
  const PlaneWaveEM wave = vacuum_plane_wave({1.0, 1.0, 1.0}, opt.units.c);
  std::vector<double> standard_norms, printed_norms, continuity_norms;
  for (int n : opt.levels) {
    const Grid3 g = level_grid(n);
    const EMSlice2 slice = sample_em_slice2(wave, g, kProbeTime);
    const CurrentSlice cur{{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})},
                           {ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})}};
    const WaveResiduals std_form =
        field_wave_residuals(slice, cur, opt.units, LaplacianSign::Standard);
    const WaveResiduals printed =
        field_wave_residuals(slice, cur, opt.units, LaplacianSign::PrintedPlus);
    standard_norms.push_back(std::max(vec3_norms(std_form.waveE).linf,
                                      vec3_norms(std_form.waveH).linf));
    printed_norms.push_back(std::max(vec3_norms(printed.waveE).linf,
                                     vec3_norms(printed.waveH).linf));
    continuity_norms.push_back(scalar_norms(std_form.continuity).linf);
  }
  out.push_back(order_entry(
      opt, make_series("wave equation, standard (1/c^2 dtt - Lap) form",
                       standard_norms, opt.exact_floor)));

  // Falsification: the printed +Lap form must stay bounded away from
  // zero and must not converge.
  {
    IdentityEntry e;
    e.name = "wave equation, printed (1/c^2 dtt + Lap) form";
    e.kind = IdentityEntry::Kind::NonConvergent;
    e.values = printed_norms;
    e.order = fit_order(printed_norms);
    double mn = printed_norms.empty() ? 0.0 : printed_norms.front();
    for (double v : printed_norms) mn = std::min(mn, v);
    e.pass = e.order < 0.5 && mn > 1e-3;
    e.detail = e.pass ? "vacuum plane waves violate the printed sign"
                      : "printed sign unexpectedly satisfied";
    out.push_back(e);
  }
  out.push_back(order_entry(
      opt, make_series("continuity residual, source-free plane wave",
                       continuity_norms, opt.exact_floor)));
  return out;
}

std::vector<IdentityEntry> matter_study(const IdentityOptions& opt) {
  std::vector<IdentityEntry> out;
  const PlaneWaveEM wave =
      matter_plane_wave({1.0, 1.0, 1.0}, opt.units.c, opt.epsilon, opt.mu);

  std::vector<double> faraday_norms, ampere_norms, divb_norms, gauss_norms;
  double extraction = 0.0;
  for (int n : opt.levels) {
    const Grid3 g = level_grid(n);
    const MatterSlice slice = sample_matter_slice(wave, g, kProbeTime);
    const CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
    const FirstPairResiduals first = first_pair_residual(slice, opt.units);
    const SecondPairResiduals second =
        second_pair_residual(slice, cur, opt.units);
    // combined_residual asserts bitwise equality with the pair unions.
    const RelationResiduals combined =
        combined_residual(slice, cur, opt.units);
    (void)combined;
    faraday_norms.push_back(vec3_norms(first.faraday).linf);
    divb_norms.push_back(scalar_norms(first.div_b).linf);
    ampere_norms.push_back(vec3_norms(second.ampere).linf);
    gauss_norms.push_back(scalar_norms(second.gauss).linf);
    extraction = std::max(extraction, first.extraction_defect);
    extraction = std::max(extraction, second.extraction_defect);
  }
  out.push_back(agreement_entry(
      "conjugation extraction leaves only the expected grades", extraction,
      0.0));
  out.push_back(order_entry(
      opt, make_series("matter Faraday residual, plane wave", faraday_norms,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("matter div B residual, plane wave", divb_norms,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("matter Ampere residual, plane wave", ampere_norms,
                       opt.exact_floor)));
  out.push_back(order_entry(
      opt, make_series("matter Gauss residual, plane wave", gauss_norms,
                       opt.exact_floor)));

  // Vacuum reduction: with eps = mu = 1 the matter residuals must equal
  // the vacuum module results exactly.
  {
    const Grid3 g = level_grid(opt.levels.empty() ? 16 : opt.levels.front());
    const PlaneWaveEM vac = vacuum_plane_wave({1.0, 1.0, 1.0}, opt.units.c);
    const MatterSlice slice = sample_matter_slice(vac, g, kProbeTime);
    const CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
    const RelationResiduals matter = combined_residual(slice, cur, opt.units);
    const EMSlice em{{slice.value.E, slice.value.H}, {slice.dt.E, slice.dt.H}};
    const MaxwellResiduals vacuum = maxwell_residual(em, cur, opt.units);
    double diff = 0.0;
    diff = std::max(diff,
                    scalar_norms(ssub(matter.scalar, vacuum.residuals.scalar))
                        .linf);
    diff = std::max(
        diff, vec3_norms(vsub(matter.vector, vacuum.residuals.vector)).linf);
    diff = std::max(diff, scalar_norms(ssub(matter.pseudoscalar,
                                            vacuum.residuals.pseudoscalar))
                              .linf);
    diff = std::max(diff, vec3_norms(vsub(matter.pseudovector,
                                          vacuum.residuals.pseudovector))
                              .linf);
    out.push_back(
        agreement_entry("vacuum reduction (eps = mu = 1) matches the vacuum "
                        "module exactly",
                        diff, 0.0));
  }
  return out;
}

IdentityReport check_identities(const IdentityOptions& opt) {
  IdentityReport rep;
  rep.options = opt;
  for (auto study :
       {operator_composition_study, potentials_to_fields_study, maxwell_study,
        relations_study, wave_sign_study, matter_study}) {
    auto entries = study(opt);
    rep.entries.insert(rep.entries.end(), entries.begin(), entries.end());
  }
  return rep;
}

nlohmann::json residual_report(const IdentityOptions& opt, int level) {
  const Grid3 g = level_grid(level);
  const CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
  nlohmann::json out;
  auto put = [&out](const std::string& name, const Norms& n) {
    out[name] = {{"linf", n.linf}, {"l2", n.l2}};
  };

  const PlaneWaveEM wave = two_plane_waves({1.0, 1.0, 1.0}, opt.units.c);
  const EMSlice slice = sample_em_slice(wave, g, kProbeTime);
  const MaxwellResiduals mr = maxwell_residual(slice, cur, opt.units);
  const RelationNorms mn = norms_of(mr.residuals);
  put("maxwell.gauss", mn.scalar);
  put("maxwell.ampere", mn.vector);
  put("maxwell.div_h", mn.pseudoscalar);
  put("maxwell.faraday", mn.pseudovector);

  const RelationResiduals p = power_relations(slice, cur, opt.units);
  put("power.poynting", scalar_norms(p.scalar));
  put("power.corollary", scalar_norms(p.pseudoscalar));
  put("power.momentum", vec3_norms(p.vector));
  put("power.pseudovector", vec3_norms(p.pseudovector));

  const RelationResiduals l = lorentz_invariant_relations(slice, cur, opt.units);
  put("invariant.first", scalar_norms(l.scalar));
  put("invariant.second", scalar_norms(l.pseudoscalar));
  put("invariant.first_gradient", vec3_norms(l.vector));
  put("invariant.second_gradient", vec3_norms(l.pseudovector));

  const EMSlice2 slice2 = sample_em_slice2(wave, g, kProbeTime);
  const CurrentSlice cs{cur, cur};
  const WaveResiduals w = field_wave_residuals(slice2, cs, opt.units);
  put("wave.electric", vec3_norms(w.waveE));
  put("wave.magnetic", vec3_norms(w.waveH));
  put("wave.continuity", scalar_norms(w.continuity));

  const PlaneWaveEM mwave =
      matter_plane_wave({1.0, 1.0, 1.0}, opt.units.c, opt.epsilon, opt.mu);
  const MatterSlice ms = sample_matter_slice(mwave, g, kProbeTime);
  const FirstPairResiduals fp = first_pair_residual(ms, opt.units);
  const SecondPairResiduals sp = second_pair_residual(ms, cur, opt.units);
  put("matter.div_b", scalar_norms(fp.div_b));
  put("matter.faraday", vec3_norms(fp.faraday));
  put("matter.gauss", scalar_norms(sp.gauss));
  put("matter.ampere", vec3_norms(sp.ampere));
  return out;
}

SolverLevelResult plane_wave_solver_level(int n, double cfl_factor,
                                          const UnitsConfig& units,
                                          double periods, int sample_interval) {
  const Grid3 g = Grid3::cube(n, 1.0);
  Scenario sc;
  sc.kind = ScenarioKind::PlaneWave;
  sc.waves = {PlaneWaveComponent{1.0, {0, 0, 1}, {1.0, 0.0, 0.0}, 0.0}};

  SolverLevelResult out;
  out.n = n;
  out.dt = cfl_factor * g.min_spacing() / units.c;
  const double period = g.length()[2] / units.c;
  out.steps = static_cast<int>(std::lround(periods * period / out.dt));
  out.dt = periods * period / out.steps;  // land exactly on the final time

  SolverConfig cfg;
  cfg.dt = out.dt;
  cfg.steps = out.steps;
  cfg.sample_interval = sample_interval;
  out.cfl = cfl_number(g, cfg.dt, units.c);

  const RunResult r = run(sc, g, cfg, units);
  out.initial_div_h = r.initial_div_h_l2;
  out.max_div_h = r.max_div_h_l2;
  const double e0 = r.records.front().energy;
  for (const DiagnosticsRecord& rec : r.records) {
    out.energy_drift =
        std::max(out.energy_drift, std::abs(rec.energy - e0) / e0);
    out.max_rms_error = std::max(out.max_rms_error, rec.l2_error);
    out.max_inv1 = std::max(out.max_inv1, std::abs(rec.inv1));
    out.max_inv2 = std::max(out.max_inv2, std::abs(rec.inv2));
  }
  out.rms_error = r.records.back().l2_error;

  // Relative L2 at the final time for reporting.
  const PlaneWaveEM wave = vacuum_plane_wave(g.length(), units.c);
  const double t_end = r.final_state.time;
  const Vec3Field refE = sample<Vec3>(g, [&](double x, double y, double z) {
    return wave.E({x, y, z}, t_end);
  });
  const Vec3Field refH = sample<Vec3>(g, [&](double x, double y, double z) {
    return wave.H({x, y, z}, t_end);
  });
  out.rel_l2_error = state_rel_l2_error(r.final_state, refE, refH);
  out.records = r.records;
  return out;
}

}  // namespace octoem

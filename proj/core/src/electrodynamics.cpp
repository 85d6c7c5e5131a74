#include "octoem/electrodynamics.hpp"

#include <cmath>
#include <numbers>

namespace octoem {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kMaxwellPathTol = 1e-12;
constexpr double kQuadraticPathTol = 1e-11;

ScalarField re_channel(const OctonField& f, std::size_t comp) {
  ScalarField out(f.grid);
  for (std::size_t s = 0; s < f.size(); ++s) out[s] = f[s][comp].real();
  return out;
}

Vec3Field re_vec(const OctonField& f, std::size_t base) {
  Vec3Field out(f.grid);
  for (std::size_t s = 0; s < f.size(); ++s)
    out[s] = {f[s][base].real(), f[s][base + 1].real(), f[s][base + 2].real()};
  return out;
}

Vec3Field im_vec(const OctonField& f, std::size_t base) {
  Vec3Field out(f.grid);
  for (std::size_t s = 0; s < f.size(); ++s)
    out[s] = {f[s][base].imag(), f[s][base + 1].imag(), f[s][base + 2].imag()};
  return out;
}

double max_relation_diff(const RelationResiduals& a, const RelationResiduals& b) {
  double m = 0.0;
  m = std::max(m, scalar_norms(ssub(a.scalar, b.scalar)).linf);
  m = std::max(m, vec3_norms(vsub(a.vector, b.vector)).linf);
  m = std::max(m, scalar_norms(ssub(a.pseudoscalar, b.pseudoscalar)).linf);
  m = std::max(m, vec3_norms(vsub(a.pseudovector, b.pseudovector)).linf);
  return m;
}

}  // namespace

double RelationNorms::max_linf() const {
  return std::max(std::max(scalar.linf, vector.linf),
                  std::max(pseudoscalar.linf, pseudovector.linf));
}

RelationNorms norms_of(const RelationResiduals& r) {
  return {scalar_norms(r.scalar), vec3_norms(r.vector),
          scalar_norms(r.pseudoscalar), vec3_norms(r.pseudovector)};
}

RelationNorms norms_of_interior(const RelationResiduals& r, int band) {
  return {scalar_norms_interior(r.scalar, band),
          vec3_norms_interior(r.vector, band),
          scalar_norms_interior(r.pseudoscalar, band),
          vec3_norms_interior(r.pseudovector, band)};
}

OctonField potential_octon(const PotentialField& p) {
  require_same_grid(p.phi.grid, p.A.grid, "potential_octon");
  OctonField out(p.phi.grid);
  for (std::size_t s = 0; s < out.size(); ++s) {
    Octon& o = out[s];
    o[0] = Complex{p.phi[s], 0.0};
    for (std::size_t m = 0; m < 3; ++m) o[1 + m] = Complex{p.A[s][m], 0.0};
  }
  return out;
}

OctonField current_octon(const CurrentField& cur, const UnitsConfig& units) {
  require_same_grid(cur.rho.grid, cur.j.grid, "current_octon");
  OctonField out(cur.rho.grid);
  const double jscale = kFourPi / units.c;
  for (std::size_t s = 0; s < out.size(); ++s) {
    Octon& o = out[s];
    o[0] = Complex{kFourPi * cur.rho[s], 0.0};
    for (std::size_t m = 0; m < 3; ++m)
      o[1 + m] = Complex{jscale * cur.j[s][m], 0.0};
  }
  return out;
}

OctonField field_octon(const EMField& f) {
  require_same_grid(f.E.grid, f.H.grid, "field_octon");
  OctonField out(f.E.grid);
  for (std::size_t s = 0; s < out.size(); ++s) {
    Octon& o = out[s];
    for (std::size_t m = 0; m < 3; ++m) {
      o[1 + m] = Complex{-f.E[s][m], 0.0};
      o[5 + m] = Complex{0.0, f.H[s][m]};
    }
  }
  return out;
}

TimeSlice field_octon_slice(const EMSlice& f) {
  return TimeSlice{field_octon(f.value), field_octon(f.dt)};
}

FieldFromPotentials field_from_potentials(const PotentialField& value,
                                          const PotentialField& dt,
                                          const UnitsConfig& units) {
  require_same_grid(value.phi.grid, value.A.grid, "field_from_potentials");
  require_same_grid(value.phi.grid, dt.phi.grid, "field_from_potentials");
  require_same_grid(value.A.grid, dt.A.grid, "field_from_potentials");
  const double inv_c = 1.0 / units.c;

  FieldFromPotentials out;
  const Vec3Field grad_phi = gradient(value.phi);
  out.field.E = vsub(vscale(-inv_c, dt.A), grad_phi);
  out.field.H = curl(value.A);
  out.lorenz_gauge = sadd(sscale(inv_c, dt.phi), divergence(value.A));

  // Octonic route: P Pi must reproduce -E + xi H plus the gauge scalar.
  const OctonField applied =
      p_apply(TimeSlice{potential_octon(value), potential_octon(dt)}, units.c);
  double defect = 0.0;
  double scale_mag = 1.0;
  for (std::size_t s = 0; s < applied.size(); ++s) {
    const Octon& o = applied[s];
    defect = std::max(defect, std::abs(o[0].real() - out.lorenz_gauge[s]));
    for (std::size_t m = 0; m < 3; ++m) {
      defect = std::max(defect, std::abs(o[1 + m].real() + out.field.E[s][m]));
      defect = std::max(defect, std::abs(o[5 + m].imag() - out.field.H[s][m]));
      scale_mag = std::max(scale_mag, std::abs(out.field.E[s][m]));
      scale_mag = std::max(scale_mag, std::abs(out.field.H[s][m]));
    }
    scale_mag = std::max(scale_mag, std::abs(out.lorenz_gauge[s]));
  }
  out.octonic_defect = defect;
  if (defect > kMaxwellPathTol * scale_mag)
    throw std::runtime_error(
        "field_from_potentials: octonic and classical routes disagree");
  return out;
}

GeneralizedEquationResiduals generalized_equation_residual(
    const PotentialSlice2& pot, const CurrentField& cur,
    const UnitsConfig& units) {
  const double c = units.c;
  const OctonField pi0 = potential_octon(pot.value);
  const OctonField pi1 = potential_octon(pot.dt);
  const OctonField pi2 = potential_octon(pot.dtt);
  require_same_grid(pi0.grid, cur.rho.grid, "generalized_equation_residual");
  const OctonField j = current_octon(cur, units);

  const OctonField inner = p_apply(TimeSlice{pi0, pi1}, c);
  // d/dt of (P Pi) with the analytic second derivative supplied.
  const OctonField inner_dt =
      field_add(field_scale(1.0 / c, pi2), nabla_apply(pi1));

  GeneralizedEquationResiduals out;
  out.composed = field_sub(p_conj_apply(TimeSlice{inner, inner_dt}, c), j);
  out.wave = field_sub(
      field_sub(field_scale(1.0 / (c * c), pi2), laplacian(pi0)), j);
  out.dropped = field_sub(out.wave, out.composed);
  return out;
}

MaxwellResiduals maxwell_residual(const EMSlice& f, const CurrentField& cur,
                                  const UnitsConfig& units) {
  require_same_grid(f.value.E.grid, cur.rho.grid, "maxwell_residual");
  const double c = units.c;

  MaxwellResiduals out;
  out.octon_residual = field_sub(p_conj_apply(field_octon_slice(f), c),
                                 current_octon(cur, units));

  // Grade unpacking into the classical normal forms of the system:
  // scalar -> div E - 4 pi rho, vector -> Ampere, the xi-carrying
  // pseudoscalar -> div H and pseudovector -> Faraday.
  RelationResiduals& r = out.residuals;
  r.scalar = re_channel(out.octon_residual, 0);
  r.vector = re_vec(out.octon_residual, 1);
  r.pseudoscalar = ScalarField(out.octon_residual.grid);
  for (std::size_t s = 0; s < r.pseudoscalar.size(); ++s)
    r.pseudoscalar[s] = xi_times(out.octon_residual[s][4]).real();
  r.pseudovector = im_vec(out.octon_residual, 5);

  // Independent classical residuals.
  RelationResiduals cl;
  cl.scalar = ssub(divergence(f.value.E), sscale(kFourPi, cur.rho));
  cl.vector = vsub(vsub(curl(f.value.H), vscale(1.0 / c, f.dt.E)),
                   vscale(kFourPi / c, cur.j));
  cl.pseudoscalar = divergence(f.value.H);
  cl.pseudovector = vadd(curl(f.value.E), vscale(1.0 / c, f.dt.H));

  double scale_mag = 1.0;
  scale_mag = std::max(scale_mag, vec3_norms(f.value.E).linf);
  scale_mag = std::max(scale_mag, vec3_norms(f.value.H).linf);
  scale_mag = std::max(scale_mag, vec3_norms(f.dt.E).linf);
  scale_mag = std::max(scale_mag, vec3_norms(f.dt.H).linf);
  scale_mag = std::max(scale_mag, norms_of(cl).max_linf());
  out.path_defect = max_relation_diff(r, cl);
  if (out.path_defect > kMaxwellPathTol * scale_mag)
    throw std::runtime_error(
        "maxwell_residual: octonic grade split disagrees with the classical "
        "residuals");
  return out;
}

OctonField reassemble_maxwell_octon(const RelationResiduals& r,
                                    const UnitsConfig&) {
  OctonField out(r.scalar.grid);
  for (std::size_t s = 0; s < out.size(); ++s) {
    Octon& o = out[s];
    o[0] = Complex{r.scalar[s], 0.0};
    for (std::size_t m = 0; m < 3; ++m) {
      o[1 + m] = Complex{r.vector[s][m], 0.0};
      o[5 + m] = Complex{0.0, r.pseudovector[s][m]};
    }
    o[4] = Complex{0.0, -r.pseudoscalar[s]};
  }
  return out;
}

namespace {

/// Shared machinery of the two quadratic relation families: left factor
/// G (E + xi H or xi H - E), the Maxwell residual octon R, and the four
/// grade normalization factors mapping the product grades onto the
/// classical normal forms.
struct QuadraticSetup {
  OctonField product;  // G * (P+ F - J)
  Vec3Field rotE, rotH;
  ScalarField divE, divH;
  double scale;
};

QuadraticSetup quadratic_setup(const EMSlice& f, const CurrentField& cur,
                               const UnitsConfig& units, bool lorentz_factor) {
  require_same_grid(f.value.E.grid, cur.rho.grid, "relation residuals");
  QuadraticSetup q;
  const OctonField residual = field_sub(
      p_conj_apply(field_octon_slice(f), units.c), current_octon(cur, units));

  OctonField left(f.value.E.grid);
  for (std::size_t s = 0; s < left.size(); ++s) {
    Octon& o = left[s];
    for (std::size_t m = 0; m < 3; ++m) {
      const double ev = f.value.E[s][m];
      o[1 + m] = Complex{lorentz_factor ? -ev : ev, 0.0};
      o[5 + m] = Complex{0.0, f.value.H[s][m]};
    }
  }
  q.product = field_multiply(left, residual);

  q.rotE = curl(f.value.E);
  q.rotH = curl(f.value.H);
  q.divE = divergence(f.value.E);
  q.divH = divergence(f.value.H);

  double m1 = 1.0;
  const Vec3Field* firsts[] = {&f.value.E, &f.value.H, &f.dt.E, &f.dt.H,
                               &cur.j,     &q.rotE,    &q.rotH};
  for (const Vec3Field* v : firsts) m1 = std::max(m1, vec3_norms(*v).linf);
  m1 = std::max(m1, scalar_norms(q.divE).linf);
  m1 = std::max(m1, scalar_norms(q.divH).linf);
  m1 = std::max(m1, kFourPi * scalar_norms(cur.rho).linf);
  q.scale = m1 * m1;
  return q;
}

}  // namespace

DualPathResiduals power_relations_paths(const EMSlice& f, const CurrentField& cur,
                                        const UnitsConfig& units) {
  const double c = units.c;
  QuadraticSetup q = quadratic_setup(f, cur, units, /*lorentz_factor=*/false);

  DualPathResiduals out;
  out.scale = q.scale;

  // Octonic path: grade split of (E + xi H)(P+ F - J), normalized onto
  // the Poynting form (x -c/4pi), the corollary and pseudovector
  // relations (divide by xi) and the momentum relation (x -1/4pi).
  const Grid3& g = q.product.grid;
  out.octonic.scalar = ScalarField(g);
  out.octonic.pseudoscalar = ScalarField(g);
  out.octonic.vector = Vec3Field(g);
  out.octonic.pseudovector = Vec3Field(g);
  for (std::size_t s = 0; s < q.product.size(); ++s) {
    const Octon& p = q.product[s];
    out.octonic.scalar[s] = (-c / kFourPi) * p[0].real();
    out.octonic.pseudoscalar[s] = p[4].imag();
    for (std::size_t m = 0; m < 3; ++m) {
      out.octonic.vector[s][m] = (-1.0 / kFourPi) * p[1 + m].real();
      out.octonic.pseudovector[s][m] = p[5 + m].imag();
    }
  }

  // Classical path, written in the pointwise product form whose terms
  // match the octonic expansion exactly (the advective pieces of the
  // gradient identities cancel).
  const Vec3Field& E = f.value.E;
  const Vec3Field& H = f.value.H;
  const Vec3Field& dtE = f.dt.E;
  const Vec3Field& dtH = f.dt.H;

  // Poynting theorem: dt (E^2+H^2)/8pi + (c/4pi) div(E x H) + j.E
  out.classical.scalar = sadd(
      sadd(sscale(1.0 / kFourPi, sadd(dot(E, dtE), dot(H, dtH))),
           sscale(c / kFourPi, ssub(dot(H, q.rotE), dot(E, q.rotH)))),
      dot(cur.j, E));

  // corollary: (1/c)(E.dtH - H.dtE) + H.rotH + E.rotE - (4pi/c) j.H
  out.classical.pseudoscalar =
      ssub(sadd(sscale(1.0 / c, ssub(dot(E, dtH), dot(H, dtE))),
                sadd(dot(H, q.rotH), dot(E, q.rotE))),
           sscale(kFourPi / c, dot(cur.j, H)));

  // momentum relation
  {
    const Vec3Field exdth = cross(E, dtH);
    const Vec3Field hxdte = cross(H, dtE);
    const Vec3Field exrote = cross(E, q.rotE);
    const Vec3Field hxroth = cross(H, q.rotH);
    const Vec3Field ediv = vmul(q.divE, E);
    const Vec3Field hdiv = vmul(q.divH, H);
    const Vec3Field rho_e = vmul(sscale(kFourPi, cur.rho), E);
    const Vec3Field hxj = cross(H, cur.j);
    Vec3Field acc(g);
    vlincomb(acc,
             {1.0 / (kFourPi * c), -1.0 / (kFourPi * c), 1.0 / kFourPi,
              1.0 / kFourPi, -1.0 / kFourPi, -1.0 / kFourPi, 1.0 / kFourPi,
              -1.0 / c},
             {&exdth, &hxdte, &exrote, &hxroth, &ediv, &hdiv, &rho_e, &hxj});
    out.classical.vector = acc;
  }

  // pseudovector relation
  {
    const Vec3Field exroth = cross(E, q.rotH);
    const Vec3Field hxrote = cross(H, q.rotE);
    const Vec3Field hdive = vmul(q.divE, H);
    const Vec3Field edivh = vmul(q.divH, E);
    const Vec3Field exdte = cross(E, dtE);
    const Vec3Field hxdth = cross(H, dtH);
    const Vec3Field rho_h = vmul(sscale(kFourPi, cur.rho), H);
    const Vec3Field jxe = cross(cur.j, E);
    Vec3Field acc(g);
    vlincomb(acc,
             {1.0, -1.0, 1.0, -1.0, -1.0 / c, -1.0 / c, -1.0, kFourPi / c},
             {&exroth, &hxrote, &hdive, &edivh, &exdte, &hxdth, &rho_h, &jxe});
    out.classical.pseudovector = acc;
  }

  out.agreement = max_relation_diff(out.octonic, out.classical);
  return out;
}

DualPathResiduals lorentz_invariant_relations_paths(const EMSlice& f,
                                                    const CurrentField& cur,
                                                    const UnitsConfig& units) {
  const double c = units.c;
  QuadraticSetup q = quadratic_setup(f, cur, units, /*lorentz_factor=*/true);

  DualPathResiduals out;
  out.scale = q.scale;

  // Grade normalization for the (xi H - E) family: scalar x c/4pi,
  // vector x 1/4pi, pseudo grades multiplied by xi.
  const Grid3& g = q.product.grid;
  out.octonic.scalar = ScalarField(g);
  out.octonic.pseudoscalar = ScalarField(g);
  out.octonic.vector = Vec3Field(g);
  out.octonic.pseudovector = Vec3Field(g);
  for (std::size_t s = 0; s < q.product.size(); ++s) {
    const Octon& p = q.product[s];
    out.octonic.scalar[s] = (c / kFourPi) * p[0].real();
    out.octonic.pseudoscalar[s] = -p[4].imag();
    for (std::size_t m = 0; m < 3; ++m) {
      out.octonic.vector[s][m] = (1.0 / kFourPi) * p[1 + m].real();
      out.octonic.pseudovector[s][m] = -p[5 + m].imag();
    }
  }

  const Vec3Field& E = f.value.E;
  const Vec3Field& H = f.value.H;
  const Vec3Field& dtE = f.dt.E;
  const Vec3Field& dtH = f.dt.H;

  // first invariant: dt (E^2-H^2)/8pi - (c/4pi)(E.rotH + H.rotE) + j.E
  out.classical.scalar = sadd(
      ssub(sscale(1.0 / kFourPi, ssub(dot(E, dtE), dot(H, dtH))),
           sscale(c / kFourPi, sadd(dot(E, q.rotH), dot(H, q.rotE)))),
      dot(cur.j, E));

  // second invariant: (1/c) dt(E.H) + E.rotE - H.rotH + (4pi/c) j.H
  out.classical.pseudoscalar =
      sadd(sadd(sscale(1.0 / c, sadd(dot(dtE, H), dot(E, dtH))),
                ssub(dot(E, q.rotE), dot(H, q.rotH))),
           sscale(kFourPi / c, dot(cur.j, H)));

  // gradient of the first invariant
  {
    const Vec3Field exdth = cross(E, dtH);
    const Vec3Field hxdte = cross(H, dtE);
    const Vec3Field exrote = cross(E, q.rotE);
    const Vec3Field hxroth = cross(H, q.rotH);
    const Vec3Field ediv = vmul(q.divE, E);
    const Vec3Field hdiv = vmul(q.divH, H);
    const Vec3Field rho_e = vmul(sscale(kFourPi, cur.rho), E);
    const Vec3Field hxj = cross(H, cur.j);
    Vec3Field acc(g);
    vlincomb(acc,
             {1.0 / (kFourPi * c), 1.0 / (kFourPi * c), 1.0 / kFourPi,
              -1.0 / kFourPi, -1.0 / kFourPi, 1.0 / kFourPi, 1.0 / kFourPi,
              1.0 / c},
             {&exdth, &hxdte, &exrote, &hxroth, &ediv, &hdiv, &rho_e, &hxj});
    out.classical.vector = acc;
  }

  // gradient of the second invariant
  {
    const Vec3Field exroth = cross(E, q.rotH);
    const Vec3Field hxrote = cross(H, q.rotE);
    const Vec3Field hdive = vmul(q.divE, H);
    const Vec3Field edivh = vmul(q.divH, E);
    const Vec3Field exdte = cross(E, dtE);
    const Vec3Field hxdth = cross(H, dtH);
    const Vec3Field rho_h = vmul(sscale(kFourPi, cur.rho), H);
    const Vec3Field jxe = cross(cur.j, E);
    Vec3Field acc(g);
    vlincomb(acc,
             {1.0, 1.0, -1.0, -1.0, -1.0 / c, 1.0 / c, 1.0, kFourPi / c},
             {&exroth, &hxrote, &hdive, &edivh, &exdte, &hxdth, &rho_h, &jxe});
    out.classical.pseudovector = acc;
  }

  out.agreement = max_relation_diff(out.octonic, out.classical);
  return out;
}

namespace {
RelationResiduals check_paths(DualPathResiduals&& d, const char* what) {
  if (d.agreement > kQuadraticPathTol * d.scale)
    throw std::runtime_error(std::string(what) +
                             ": octonic and classical paths disagree");
  return std::move(d.octonic);
}
}  // namespace

RelationResiduals power_relations(const EMSlice& f, const CurrentField& cur,
                                  const UnitsConfig& units) {
  return check_paths(power_relations_paths(f, cur, units), "power_relations");
}

RelationResiduals lorentz_invariant_relations(const EMSlice& f,
                                              const CurrentField& cur,
                                              const UnitsConfig& units) {
  return check_paths(lorentz_invariant_relations_paths(f, cur, units),
                     "lorentz_invariant_relations");
}

WaveResiduals field_wave_residuals(const EMSlice2& f, const CurrentSlice& cur,
                                   const UnitsConfig& units,
                                   LaplacianSign sign) {
  require_same_grid(f.value.E.grid, cur.value.rho.grid, "field_wave_residuals");
  const double c = units.c;
  const double lap_sign = (sign == LaplacianSign::Standard) ? -1.0 : 1.0;

  WaveResiduals out;
  {
    const Vec3Field lapE = vector_laplacian(f.value.E);
    const Vec3Field grad_rho = gradient(cur.value.rho);
    Vec3Field acc(f.value.E.grid);
    vlincomb(acc, {1.0 / (c * c), lap_sign, kFourPi, kFourPi / (c * c)},
             {&f.dtt.E, &lapE, &grad_rho, &cur.dt.j});
    out.waveE = acc;
  }
  {
    const Vec3Field lapH = vector_laplacian(f.value.H);
    const Vec3Field rot_j = curl(cur.value.j);
    Vec3Field acc(f.value.H.grid);
    vlincomb(acc, {1.0 / (c * c), lap_sign, -kFourPi / c},
             {&f.dtt.H, &lapH, &rot_j});
    out.waveH = acc;
  }
  out.continuity = sadd(cur.dt.rho, divergence(cur.value.j));
  return out;
}

InvariantFields invariant_scalars(const EMField& f, const UnitsConfig& units) {
  require_same_grid(f.E.grid, f.H.grid, "invariant_scalars");
  InvariantFields out;
  const ScalarField e2 = dot(f.E, f.E);
  const ScalarField h2 = dot(f.H, f.H);
  out.energy = sscale(1.0 / (2.0 * kFourPi), sadd(e2, h2));
  out.poynting = vscale(units.c / kFourPi, cross(f.E, f.H));
  out.inv1 = sscale(1.0 / (2.0 * kFourPi), ssub(e2, h2));
  out.inv2 = dot(f.E, f.H);
  return out;
}

}  // namespace octoem

#include "octoem/matter.hpp"

#include <cmath>
#include <numbers>

namespace octoem {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kPathTol = 1e-12;
}  // namespace

MatterFields ConstitutiveModel::close(const Vec3Field& E,
                                      const Vec3Field& H) const {
  require_same_grid(E.grid, H.grid, "ConstitutiveModel::close");
  MatterFields m;
  m.E = E;
  m.H = H;
  m.D = vscale(epsilon, E);
  m.B = vscale(mu, H);
  return m;
}

OctonField f_eb_octon(const Vec3Field& E, const Vec3Field& B) {
  require_same_grid(E.grid, B.grid, "f_eb_octon");
  OctonField out(E.grid);
  for (std::size_t s = 0; s < out.size(); ++s) {
    Octon& o = out[s];
    for (std::size_t m = 0; m < 3; ++m) {
      o[1 + m] = Complex{-E[s][m], 0.0};
      o[5 + m] = Complex{0.0, B[s][m]};
    }
  }
  return out;
}

OctonField f_dh_octon(const Vec3Field& D, const Vec3Field& H) {
  return f_eb_octon(D, H);  // same shape: -first + xi second
}

OctonField f0_octon(const MatterFields& m) {
  require_same_grid(m.E.grid, m.D.grid, "f0_octon");
  require_same_grid(m.H.grid, m.B.grid, "f0_octon");
  require_same_grid(m.E.grid, m.H.grid, "f0_octon");
  OctonField out(m.E.grid);
  for (std::size_t s = 0; s < out.size(); ++s) {
    Octon& o = out[s];
    for (std::size_t q = 0; q < 3; ++q) {
      o[1 + q] = Complex{-m.D[s][q], -m.E[s][q]};
      o[5 + q] = Complex{-m.B[s][q], m.H[s][q]};
    }
  }
  return out;
}

MatterOctons build_octons(const MatterFields& m) {
  MatterOctons out;
  out.f_eb = f_eb_octon(m.E, m.B);
  out.f_dh = f_dh_octon(m.D, m.H);
  out.f0 = f0_octon(m);
  // F0 = xi F_EB + F_DH must hold identically.
  const OctonField composed =
      field_add(field_scale(Complex{0.0, 1.0}, out.f_eb), out.f_dh);
  for (std::size_t s = 0; s < out.f0.size(); ++s) {
    if (!(composed[s] == out.f0[s]))
      throw std::runtime_error("build_octons: F0 != xi F_EB + F_DH");
  }
  return out;
}

namespace {

/// P+ applied to a (-X + xi Y) style octon slice.
OctonField apply_p_conj_pair(const Vec3Field& X, const Vec3Field& Y,
                             const Vec3Field& dtX, const Vec3Field& dtY,
                             double c) {
  return p_conj_apply(
      TimeSlice{f_eb_octon(X, Y), f_eb_octon(dtX, dtY)}, c);
}

}  // namespace

FirstPairResiduals first_pair_residual(const MatterSlice& m,
                                       const UnitsConfig& units) {
  const OctonField y = apply_p_conj_pair(m.value.E, m.value.B, m.dt.E, m.dt.B,
                                         units.c);
  const OctonField z = field_sub(y, field_conjugate(y));

  FirstPairResiduals out;
  out.div_b = ScalarField(z.grid);
  out.faraday = Vec3Field(z.grid);
  out.extraction_defect = 0.0;
  for (std::size_t s = 0; s < z.size(); ++s) {
    const Octon& o = z[s];
    // scalar and vector grades cancel identically for real inputs
    out.extraction_defect =
        std::max(out.extraction_defect, std::abs(o[0]));
    for (std::size_t q = 1; q <= 3; ++q)
      out.extraction_defect = std::max(out.extraction_defect, std::abs(o[q]));
    // z = -2 xi div B (pseudoscalar) + 2 xi (rot E + (1/c) dtB) (pseudovector)
    out.div_b[s] = -0.5 * o[4].imag();
    for (std::size_t q = 0; q < 3; ++q)
      out.faraday[s][q] = 0.5 * o[5 + q].imag();
  }

  const ScalarField div_b_cl = divergence(m.value.B);
  const Vec3Field faraday_cl =
      vadd(curl(m.value.E), vscale(1.0 / units.c, m.dt.B));
  double defect = scalar_norms(ssub(out.div_b, div_b_cl)).linf;
  defect = std::max(defect, vec3_norms(vsub(out.faraday, faraday_cl)).linf);
  out.path_defect = defect;
  double scale_mag = std::max(
      1.0, std::max(scalar_norms(div_b_cl).linf, vec3_norms(faraday_cl).linf));
  scale_mag = std::max(scale_mag, vec3_norms(m.value.E).linf);
  scale_mag = std::max(scale_mag, vec3_norms(m.value.B).linf);
  if (defect > kPathTol * scale_mag)
    throw std::runtime_error(
        "first_pair_residual: octonic and classical paths disagree");
  return out;
}

SecondPairResiduals second_pair_residual(const MatterSlice& m,
                                         const CurrentField& cur,
                                         const UnitsConfig& units) {
  require_same_grid(m.value.D.grid, cur.rho.grid, "second_pair_residual");
  const OctonField w = apply_p_conj_pair(m.value.D, m.value.H, m.dt.D, m.dt.H,
                                         units.c);
  const OctonField j = current_octon(cur, units);
  const OctonField z = field_sub(field_add(w, field_conjugate(w)),
                                 field_scale(2.0, j));

  SecondPairResiduals out;
  out.gauss = ScalarField(z.grid);
  out.ampere = Vec3Field(z.grid);
  out.extraction_defect = 0.0;
  for (std::size_t s = 0; s < z.size(); ++s) {
    const Octon& o = z[s];
    // pseudoscalar and pseudovector grades cancel identically
    out.extraction_defect = std::max(out.extraction_defect, std::abs(o[4]));
    for (std::size_t q = 5; q <= 7; ++q)
      out.extraction_defect = std::max(out.extraction_defect, std::abs(o[q]));
    out.gauss[s] = 0.5 * o[0].real();
    for (std::size_t q = 0; q < 3; ++q)
      out.ampere[s][q] = 0.5 * o[1 + q].real();
  }

  const ScalarField gauss_cl =
      ssub(divergence(m.value.D), sscale(kFourPi, cur.rho));
  const Vec3Field ampere_cl =
      vsub(vsub(curl(m.value.H), vscale(1.0 / units.c, m.dt.D)),
           vscale(kFourPi / units.c, cur.j));
  double defect = scalar_norms(ssub(out.gauss, gauss_cl)).linf;
  defect = std::max(defect, vec3_norms(vsub(out.ampere, ampere_cl)).linf);
  out.path_defect = defect;
  double scale_mag = std::max(
      1.0, std::max(scalar_norms(gauss_cl).linf, vec3_norms(ampere_cl).linf));
  scale_mag = std::max(scale_mag, vec3_norms(m.value.D).linf);
  scale_mag = std::max(scale_mag, vec3_norms(m.value.H).linf);
  if (defect > kPathTol * scale_mag)
    throw std::runtime_error(
        "second_pair_residual: octonic and classical paths disagree");
  return out;
}

RelationResiduals combined_residual(const MatterSlice& m, const CurrentField& cur,
                                    const UnitsConfig& units) {
  require_same_grid(m.value.E.grid, cur.rho.grid, "combined_residual");
  const OctonField applied = p_conj_apply(
      TimeSlice{f0_octon(m.value), f0_octon(m.dt)}, units.c);
  const OctonField j = current_octon(cur, units);

  RelationResiduals out;
  out.scalar = ScalarField(applied.grid);
  out.vector = Vec3Field(applied.grid);
  out.pseudoscalar = ScalarField(applied.grid);
  out.pseudovector = Vec3Field(applied.grid);
  for (std::size_t s = 0; s < applied.size(); ++s) {
    const Octon& o = applied[s];
    const Octon& js = j[s];
    // Re{P+ F0} - J; pseudovector grade negated into Faraday normal form.
    out.scalar[s] = o[0].real() - js[0].real();
    for (std::size_t q = 0; q < 3; ++q) {
      out.vector[s][q] = o[1 + q].real() - js[1 + q].real();
      out.pseudovector[s][q] = -o[5 + q].real();
    }
    out.pseudoscalar[s] = o[4].real();
  }

  // The combined equation must reproduce the two pair extractions
  // exactly, coefficient for coefficient.
  const FirstPairResiduals first = first_pair_residual(m, units);
  const SecondPairResiduals second = second_pair_residual(m, cur, units);
  for (std::size_t s = 0; s < applied.size(); ++s) {
    bool ok = out.scalar[s] == second.gauss[s] &&
              out.pseudoscalar[s] == first.div_b[s];
    for (std::size_t q = 0; q < 3; ++q) {
      ok = ok && out.vector[s][q] == second.ampere[s][q];
      ok = ok && out.pseudovector[s][q] == first.faraday[s][q];
    }
    if (!ok)
      throw std::runtime_error(
          "combined_residual: grade content differs from the pair equations");
  }
  return out;
}

}  // namespace octoem

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "octoem/electrodynamics.hpp"
#include "octoem/identities.hpp"
#include "octoem/scenarios.hpp"

using namespace octoem;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
const UnitsConfig kUnits{};

CurrentField zero_current(const Grid3& g) {
  return {ScalarField(g), Vec3Field(g, Vec3{0.0, 0.0, 0.0})};
}
}  // namespace

TEST_CASE("field_from_potentials: uniform and rotational probes") {
  const Grid3 g({12, 12, 12}, {0.1, 0.1, 0.1});

  // phi = -x, A = 0, static: E = x-hat, H = 0
  PotentialField value{sample<double>(g, [](double x, double, double) {
                         return -x;
                       }),
                       Vec3Field(g, Vec3{0, 0, 0})};
  PotentialField dt{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
  auto f = field_from_potentials(value, dt, kUnits);
  for (int i = 2; i < 10; ++i) {
    CHECK(f.field.E.at(i, 5, 5)[0] == doctest::Approx(1.0));
    CHECK(f.field.E.at(i, 5, 5)[1] == 0.0);
    CHECK(vec3_norms(f.field.H).linf == 0.0);
  }

  // phi = 0, A = (0, x, 0): E = 0, H = (0, 0, 1)
  value.phi = ScalarField(g);
  value.A = sample<Vec3>(g, [](double x, double, double) {
    return Vec3{0.0, x, 0.0};
  });
  f = field_from_potentials(value, dt, kUnits);
  for (int i = 2; i < 10; ++i) {
    CHECK(vec3_norms(f.field.E).linf == 0.0);
    CHECK(f.field.H.at(i, 5, 5)[2] == doctest::Approx(1.0));
  }
}

TEST_CASE("field_from_potentials: travelling-wave potential") {
  // phi = 0, A = (A0 sin(kz - w t), 0, 0) with w = c k:
  // E = (A0 w / c) cos x-hat, H = A0 k cos y-hat; both routes agree.
  const double a0 = 0.8;
  const double k = kTwoPi;
  const Grid3 g = Grid3::cube(32, 1.0);
  const double t = 0.2;
  PotentialField value{ScalarField(g),
                       sample<Vec3>(g, [&](double, double, double z) {
                         return Vec3{a0 * std::sin(k * (z - t)), 0.0, 0.0};
                       })};
  PotentialField dt{ScalarField(g),
                    sample<Vec3>(g, [&](double, double, double z) {
                      return Vec3{-a0 * k * std::cos(k * (z - t)), 0.0, 0.0};
                    })};
  const auto f = field_from_potentials(value, dt, kUnits);
  CHECK(f.octonic_defect <= 1e-12);
  // E is exact (analytic time derivative), H carries the stencil error.
  double e_err = 0.0, h_err = 0.0;
  for (int kk = 0; kk < g.n[2]; ++kk) {
    const double z = g.position(5, 5, kk)[2];
    e_err = std::max(e_err, std::abs(f.field.E.at(5, 5, kk)[0] -
                                     a0 * k * std::cos(k * (z - t))));
    h_err = std::max(h_err, std::abs(f.field.H.at(5, 5, kk)[1] -
                                     a0 * k * std::cos(k * (z - t))));
  }
  CHECK(e_err <= 1e-12);
  CHECK(h_err < 0.02 * a0 * k);  // second-order stencil error at n = 32
  // Lorenz gauge holds for this transverse wave.
  CHECK(scalar_norms(f.lorenz_gauge).linf <= 1e-12);
}

TEST_CASE("generalized equation: trivial and quadratic probes") {
  const Grid3 g({10, 10, 10}, {0.2, 0.2, 0.2});

  // zero potential, nonzero J: residual = -J exactly
  PotentialSlice2 pot;
  pot.value = {ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
  pot.dt = pot.value;
  pot.dtt = pot.value;
  CurrentField cur{sample<double>(g, [](double, double, double) {
                     return 0.25;
                   }),
                   Vec3Field(g, Vec3{0.1, 0.0, 0.0})};
  const auto r = generalized_equation_residual(pot, cur, kUnits);
  const OctonField j = current_octon(cur, kUnits);
  CHECK(field_norms(field_add(r.composed, j)).linf == 0.0);
  CHECK(field_norms(field_add(r.wave, j)).linf == 0.0);

  // static phi with Lap phi = -4 pi rho, quadratic probe: interior zero
  const double rho0 = 0.3;
  PotentialSlice2 pot2;
  pot2.value = {sample<double>(g, [&](double x, double y, double z) {
                  return -(x * x + y * y + z * z) * (kTwoPi / 3.0) * rho0;
                }),
                Vec3Field(g, Vec3{0, 0, 0})};
  pot2.dt = {ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
  pot2.dtt = pot2.dt;
  CurrentField cur2{sample<double>(g, [&](double, double, double) {
                      return rho0;
                    }),
                    Vec3Field(g, Vec3{0, 0, 0})};
  const auto r2 = generalized_equation_residual(pot2, cur2, kUnits);
  CHECK(field_norms_interior(r2.composed, 2).linf <= 1e-10);
  CHECK(field_norms_interior(r2.wave, 2).linf <= 1e-10);
}

TEST_CASE("generalized equation: composed operator converges to the wave operator") {
  IdentityOptions opt;
  opt.levels = {8, 16, 32};
  const auto entries = operator_composition_study(opt);
  REQUIRE(entries.size() == 2);
  for (const auto& e : entries) {
    INFO(e.name);
    CHECK(e.pass);
    if (e.kind == IdentityEntry::Kind::Order) {
      CHECK(e.order > 1.8);
      CHECK(e.order < 2.2);
    }
  }
}

TEST_CASE("maxwell_residual: linear fields and pure charge") {
  const Grid3 g({12, 12, 12}, {0.15, 0.15, 0.15});

  // E = (x, y, z), rho = 3 / 4pi: all residuals vanish on interior sites
  EMSlice slice;
  slice.value.E = sample<Vec3>(g, [](double x, double y, double z) {
    return Vec3{x, y, z};
  });
  slice.value.H = Vec3Field(g, Vec3{0, 0, 0});
  slice.dt.E = Vec3Field(g, Vec3{0, 0, 0});
  slice.dt.H = Vec3Field(g, Vec3{0, 0, 0});
  CurrentField cur{sample<double>(g, [](double, double, double) {
                     return 3.0 / kFourPi;
                   }),
                   Vec3Field(g, Vec3{0, 0, 0})};
  const auto r = maxwell_residual(slice, cur, kUnits);
  const RelationNorms interior = norms_of_interior(r.residuals, 2);
  CHECK(interior.max_linf() <= 1e-12);

  // E = H = 0, rho != 0: scalar residual is exactly -4 pi rho
  EMSlice zero;
  zero.value.E = Vec3Field(g, Vec3{0, 0, 0});
  zero.value.H = zero.value.E;
  zero.dt = zero.value;
  const auto r2 = maxwell_residual(zero, cur, kUnits);
  for (std::size_t s = 0; s < r2.residuals.scalar.size(); ++s)
    CHECK(r2.residuals.scalar[s] == -kFourPi * cur.rho[s]);
  CHECK(vec3_norms(r2.residuals.vector).linf == 0.0);
  CHECK(scalar_norms(r2.residuals.pseudoscalar).linf == 0.0);
  CHECK(vec3_norms(r2.residuals.pseudovector).linf == 0.0);
}

TEST_CASE("maxwell_residual: octonic grades are typed and recombine bitwise") {
  const Grid3 g = Grid3::cube(12, 1.0);
  const RandomEMData d = random_em_data(g, 99);
  const EMSlice slice{{d.E, d.H}, {d.dtE, d.dtH}};
  const CurrentField cur{d.rho, d.j};
  const auto r = maxwell_residual(slice, cur, kUnits);
  CHECK(r.path_defect <= 1e-12 * 100.0);

  // Reality structure: scalar and vector grades real, pseudo grades
  // purely imaginary; exact for real inputs.
  for (const Octon& o : r.octon_residual.data) {
    CHECK(o[0].imag() == 0.0);
    for (std::size_t m = 1; m <= 3; ++m) CHECK(o[m].imag() == 0.0);
    CHECK(o[4].real() == 0.0);
    for (std::size_t m = 5; m <= 7; ++m) CHECK(o[m].real() == 0.0);
  }

  // Recombining the unpacked grades reproduces the octon residual bitwise.
  const OctonField back = reassemble_maxwell_octon(r.residuals, kUnits);
  for (std::size_t s = 0; s < back.size(); ++s)
    CHECK(back[s] == r.octon_residual[s]);
}

TEST_CASE("maxwell_residual: plane-wave residuals converge at second order") {
  IdentityOptions opt;
  opt.levels = {8, 16, 32};
  for (const auto& e : maxwell_study(opt)) {
    INFO(e.name);
    CHECK(e.pass);
  }
}

TEST_CASE("power relations: static and off-shell probes") {
  const Grid3 g({12, 12, 12}, {0.15, 0.15, 0.15});

  // Static E = (x, y, z), H = 0, j = 0: Poynting residual vanishes.
  EMSlice slice;
  slice.value.E = sample<Vec3>(g, [](double x, double y, double z) {
    return Vec3{x, y, z};
  });
  slice.value.H = Vec3Field(g, Vec3{0, 0, 0});
  slice.dt.E = Vec3Field(g, Vec3{0, 0, 0});
  slice.dt.H = Vec3Field(g, Vec3{0, 0, 0});
  const auto p = power_relations(slice, zero_current(g), kUnits);
  CHECK(scalar_norms(p.scalar).linf <= 1e-12);

  // Off-shell: E = (x,0,0), j = (1,0,0): the Poynting residual equals
  // j . E = x pointwise.
  EMSlice off;
  off.value.E = sample<Vec3>(g, [](double x, double, double) {
    return Vec3{x, 0.0, 0.0};
  });
  off.value.H = Vec3Field(g, Vec3{0, 0, 0});
  off.dt.E = Vec3Field(g, Vec3{0, 0, 0});
  off.dt.H = Vec3Field(g, Vec3{0, 0, 0});
  CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{1.0, 0.0, 0.0})};
  const auto p2 = power_relations(off, cur, kUnits);
  for (int i = 2; i < 10; ++i) {
    const double x = g.position(i, 5, 5)[0];
    CHECK(p2.scalar.at(i, 5, 5) == doctest::Approx(x).epsilon(1e-10));
  }
}

TEST_CASE("lorentz relations: static probes vanish") {
  const Grid3 g({12, 12, 12}, {0.15, 0.15, 0.15});

  // E = (x, y, z), H = 0: the second-invariant relation vanishes.
  EMSlice slice;
  slice.value.E = sample<Vec3>(g, [](double x, double y, double z) {
    return Vec3{x, y, z};
  });
  slice.value.H = Vec3Field(g, Vec3{0, 0, 0});
  slice.dt.E = Vec3Field(g, Vec3{0, 0, 0});
  slice.dt.H = Vec3Field(g, Vec3{0, 0, 0});
  const auto l = lorentz_invariant_relations(slice, zero_current(g), kUnits);
  CHECK(scalar_norms(l.pseudoscalar).linf == 0.0);

  // Crossed uniform fields: every term of the gradient relation cancels.
  EMSlice crossed;
  crossed.value.E = Vec3Field(g, Vec3{2.0, 0.0, 0.0});
  crossed.value.H = Vec3Field(g, Vec3{0.0, 0.0, 1.5});
  crossed.dt.E = Vec3Field(g, Vec3{0, 0, 0});
  crossed.dt.H = Vec3Field(g, Vec3{0, 0, 0});
  const auto l2 = lorentz_invariant_relations(crossed, zero_current(g), kUnits);
  CHECK(vec3_norms(l2.pseudovector).linf == 0.0);
  CHECK(vec3_norms(l2.vector).linf == 0.0);
}

TEST_CASE("energy, momentum and invariant relations: dual paths agree and converge") {
  IdentityOptions opt;
  opt.levels = {8, 16, 32};
  for (const auto& e : relations_study(opt)) {
    INFO(e.name);
    CHECK(e.pass);
  }
}

TEST_CASE("wave residuals: standard sign converges, printed sign does not") {
  IdentityOptions opt;
  opt.levels = {8, 16, 32};
  for (const auto& e : wave_sign_study(opt)) {
    INFO(e.name);
    CHECK(e.pass);
  }
}

TEST_CASE("continuity residual vanishes for a constructed linear source") {
  // rho(t) = t x, j = (-x^2/2, 0, 0): div j = -x exactly on quadratics.
  const Grid3 g({12, 12, 12}, {0.1, 0.1, 0.1});
  EMSlice2 f;
  f.value.E = Vec3Field(g, Vec3{0, 0, 0});
  f.value.H = f.value.E;
  f.dt = f.value;
  f.dtt = f.value;
  CurrentSlice cur;
  cur.value.rho = ScalarField(g);  // t = 0
  cur.value.j = sample<Vec3>(g, [](double x, double, double) {
    return Vec3{-0.5 * x * x, 0.0, 0.0};
  });
  cur.dt.rho = sample<double>(g, [](double x, double, double) { return x; });
  cur.dt.j = Vec3Field(g, Vec3{0, 0, 0});
  const auto w = field_wave_residuals(f, cur, kUnits);
  CHECK(scalar_norms_interior(w.continuity, 2).linf <= 1e-11);
}

TEST_CASE("invariant scalars") {
  const Grid3 g = Grid3::cube(4, 1.0);
  EMField f{Vec3Field(g, Vec3{1.0, 0.0, 0.0}), Vec3Field(g, Vec3{0.0, 1.0, 0.0})};
  const auto inv = invariant_scalars(f, kUnits);
  CHECK(inv.energy[0] == doctest::Approx(1.0 / kFourPi));
  CHECK(inv.poynting[0][2] == doctest::Approx(1.0 / kFourPi));
  CHECK(inv.poynting[0][0] == 0.0);
  CHECK(inv.inv1[0] == 0.0);
  CHECK(inv.inv2[0] == 0.0);

  EMField parallel{Vec3Field(g, Vec3{0.5, 0.0, 0.0}),
                   Vec3Field(g, Vec3{0.5, 0.0, 0.0})};
  const auto inv2 = invariant_scalars(parallel, kUnits);
  CHECK(inv2.inv1[0] == 0.0);
  CHECK(inv2.inv2[0] == doctest::Approx(0.25));

  EMField zero{Vec3Field(g, Vec3{0, 0, 0}), Vec3Field(g, Vec3{0, 0, 0})};
  const auto inv3 = invariant_scalars(zero, kUnits);
  CHECK(scalar_norms(inv3.energy).linf == 0.0);
  CHECK(scalar_norms(inv3.inv2).linf == 0.0);
}

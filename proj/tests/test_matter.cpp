#include "doctest.h"

#include <cmath>
#include <numbers>

#include "octoem/identities.hpp"
#include "octoem/matter.hpp"
#include "octoem/scenarios.hpp"

using namespace octoem;

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
const UnitsConfig kUnits{};

MatterSlice random_matter_slice(const Grid3& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Vec3 box = g.length();
  MatterSlice m;
  m.value.E = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  m.value.D = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  m.value.H = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  m.value.B = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  m.dt.E = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  m.dt.D = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  m.dt.H = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  m.dt.B = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  return m;
}
}  // namespace

TEST_CASE("matter octon construction") {
  const Grid3 g = Grid3::cube(6, 1.0);

  // E = x-hat only: F_EB = -i, F_DH = 0, F0 = -xi i
  MatterFields m;
  m.E = Vec3Field(g, Vec3{1.0, 0.0, 0.0});
  m.D = Vec3Field(g, Vec3{0.0, 0.0, 0.0});
  m.H = Vec3Field(g, Vec3{0.0, 0.0, 0.0});
  m.B = Vec3Field(g, Vec3{0.0, 0.0, 0.0});
  const MatterOctons o = build_octons(m);
  CHECK(o.f_eb[0] == Octon::unit(Basis::PolarX, -1.0));
  CHECK(field_norms(o.f_dh).linf == 0.0);
  CHECK(o.f0[0] == Octon::unit(Basis::PolarX, Complex{0.0, -1.0}));

  // vacuum identification E = D, H = B: F_DH equals the field octon F
  std::mt19937_64 rng(5);
  Vec3Field e(g), h(g);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& v : e.data) v = {u(rng), u(rng), u(rng)};
  for (auto& v : h.data) v = {u(rng), u(rng), u(rng)};
  const MatterFields vac = ConstitutiveModel{1.0, 1.0}.close(e, h);
  const MatterOctons ov = build_octons(vac);
  const OctonField f = field_octon({e, h});
  for (std::size_t s = 0; s < f.size(); ++s) CHECK(ov.f_dh[s] == f[s]);

  // F0 - (xi F_EB + F_DH) = 0 bitwise already asserted inside
  // build_octons; exercise it on random fields.
  MatterFields rnd;
  rnd.E = e;
  rnd.H = h;
  rnd.D = vscale(1.7, e);
  rnd.B = vscale(0.4, h);
  CHECK_NOTHROW(build_octons(rnd));
}

TEST_CASE("constitutive closure") {
  const Grid3 g = Grid3::cube(4, 1.0);
  const Vec3Field e(g, Vec3{2.0, 0.0, 0.0});
  const Vec3Field h(g, Vec3{0.0, 0.0, 3.0});
  const MatterFields m = ConstitutiveModel{2.0, 1.5}.close(e, h);
  CHECK(m.D[0][0] == 4.0);
  CHECK(m.B[0][2] == 4.5);
  CHECK_THROWS_AS(ConstitutiveModel(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("first pair: uniform and linear probes") {
  const Grid3 g({12, 12, 12}, {0.1, 0.1, 0.1});
  MatterSlice m;
  m.value.E = Vec3Field(g, Vec3{0, 0, 0});
  m.value.B = Vec3Field(g, Vec3{0.0, 0.0, 1.0});
  m.value.D = m.value.E;
  m.value.H = m.value.B;
  m.dt.E = Vec3Field(g, Vec3{0, 0, 0});
  m.dt.B = m.dt.E;
  m.dt.D = m.dt.E;
  m.dt.H = m.dt.E;
  auto r = first_pair_residual(m, kUnits);
  CHECK(scalar_norms(r.div_b).linf == 0.0);
  CHECK(vec3_norms(r.faraday).linf == 0.0);
  CHECK(r.extraction_defect == 0.0);

  // B = (x, 0, 0): div B = 1 on interior sites, no Faraday residual
  m.value.B = sample<Vec3>(g, [](double x, double, double) {
    return Vec3{x, 0.0, 0.0};
  });
  m.value.H = m.value.B;
  r = first_pair_residual(m, kUnits);
  for (int i = 2; i < 10; ++i)
    CHECK(r.div_b.at(i, 5, 5) == doctest::Approx(1.0));
  CHECK(vec3_norms(r.faraday).linf == 0.0);
}

TEST_CASE("conjugation does not commute with the octonic derivative") {
  // E = (y, 0, 0), B = 0: (P+ F)* and P+(F*) differ wherever rot E != 0.
  const Grid3 g({10, 10, 10}, {0.2, 0.2, 0.2});
  const Vec3Field e = sample<Vec3>(g, [](double, double y, double) {
    return Vec3{y, 0.0, 0.0};
  });
  const Vec3Field zero(g, Vec3{0, 0, 0});
  const TimeSlice slice{f_eb_octon(e, zero), f_eb_octon(zero, zero)};
  const OctonField conj_after = field_conjugate(p_conj_apply(slice, 1.0));
  const TimeSlice conj_slice{field_conjugate(slice.value),
                             field_conjugate(slice.d_dt)};
  const OctonField conj_before = p_conj_apply(conj_slice, 1.0);
  CHECK(field_norms(field_sub(conj_after, conj_before)).linf >
        0.5);  // rot E = -z-hat, so the pseudovector parts differ by 2 xi rot E
}

TEST_CASE("second pair: linear field with matched source") {
  const Grid3 g({12, 12, 12}, {0.1, 0.1, 0.1});
  // E = (x, y, z), eps = 2: div D = 6 = 4 pi rho with rho = 3 / 2 pi
  MatterSlice m;
  m.value.E = sample<Vec3>(g, [](double x, double y, double z) {
    return Vec3{x, y, z};
  });
  const ConstitutiveModel cm{2.0, 1.0};
  m.value = cm.close(m.value.E, Vec3Field(g, Vec3{0, 0, 0}));
  m.dt = MatterFields{Vec3Field(g, Vec3{0, 0, 0}), Vec3Field(g, Vec3{0, 0, 0}),
                      Vec3Field(g, Vec3{0, 0, 0}), Vec3Field(g, Vec3{0, 0, 0})};
  CurrentField cur{sample<double>(g, [](double, double, double) {
                     return 3.0 / (2.0 * std::numbers::pi);
                   }),
                   Vec3Field(g, Vec3{0, 0, 0})};
  auto r = second_pair_residual(m, cur, kUnits);
  CHECK(scalar_norms_interior(r.gauss, 2).linf <= 1e-11);
  CHECK(vec3_norms_interior(r.ampere, 2).linf <= 1e-11);
  CHECK(r.extraction_defect == 0.0);

  // D = H = 0, rho != 0: gauss residual = -4 pi rho exactly
  MatterSlice z;
  z.value = MatterFields{Vec3Field(g, Vec3{0, 0, 0}), Vec3Field(g, Vec3{0, 0, 0}),
                         Vec3Field(g, Vec3{0, 0, 0}), Vec3Field(g, Vec3{0, 0, 0})};
  z.dt = z.value;
  r = second_pair_residual(z, cur, kUnits);
  for (std::size_t s = 0; s < r.gauss.size(); ++s)
    CHECK(r.gauss[s] == -kFourPi * cur.rho[s]);
}

TEST_CASE("combined equation equals the union of the pairs bitwise") {
  const Grid3 g = Grid3::cube(10, 1.0);
  const MatterSlice m = random_matter_slice(g, 123);
  std::mt19937_64 rng(321);
  const CurrentField cur{
      sample_value(g, random_smooth_scalar(rng, g.length()), 0.0),
      sample_value(g, random_smooth_vec3(rng, g.length()), 0.0)};

  // combined_residual internally asserts bitwise equality; verify the
  // values once more against the direct pair calls.
  const RelationResiduals c = combined_residual(m, cur, kUnits);
  const FirstPairResiduals fp = first_pair_residual(m, kUnits);
  const SecondPairResiduals sp = second_pair_residual(m, cur, kUnits);
  for (std::size_t s = 0; s < c.scalar.size(); ++s) {
    CHECK(c.scalar[s] == sp.gauss[s]);
    CHECK(c.pseudoscalar[s] == fp.div_b[s]);
    for (std::size_t q = 0; q < 3; ++q) {
      CHECK(c.vector[s][q] == sp.ampere[s][q]);
      CHECK(c.pseudovector[s][q] == fp.faraday[s][q]);
    }
  }
}

TEST_CASE("all fields zero gives zero residuals") {
  const Grid3 g = Grid3::cube(6, 1.0);
  MatterSlice z;
  z.value = MatterFields{Vec3Field(g, Vec3{0, 0, 0}), Vec3Field(g, Vec3{0, 0, 0}),
                         Vec3Field(g, Vec3{0, 0, 0}), Vec3Field(g, Vec3{0, 0, 0})};
  z.dt = z.value;
  const CurrentField cur{ScalarField(g), Vec3Field(g, Vec3{0, 0, 0})};
  const RelationResiduals c = combined_residual(z, cur, kUnits);
  CHECK(scalar_norms(c.scalar).linf == 0.0);
  CHECK(vec3_norms(c.vector).linf == 0.0);
  CHECK(scalar_norms(c.pseudoscalar).linf == 0.0);
  CHECK(vec3_norms(c.pseudovector).linf == 0.0);
}

TEST_CASE("matter study: convergence and vacuum reduction") {
  IdentityOptions opt;
  opt.levels = {8, 16, 32};
  for (const auto& e : matter_study(opt)) {
    INFO(e.name);
    CHECK(e.pass);
  }
}

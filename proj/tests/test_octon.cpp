#include "doctest.h"

#include <random>

#include "octoem/gibbs.hpp"
#include "octoem/octon.hpp"
#include "octoem/scenarios.hpp"
#include "octoem/verify.hpp"

using namespace octoem;

namespace {
const Complex kXi{0.0, 1.0};

Octon u(Basis b) { return Octon::unit(b); }

bool close(const Octon& a, const Octon& b, double tol = 1e-12) {
  return linf_norm(a - b) <= tol;
}
}  // namespace

TEST_CASE("basis products follow the multiplication rules") {
  // ij = xi K
  auto p = basis_product(Basis::PolarX, Basis::PolarY);
  CHECK(p.unit == Basis::AxialZ);
  CHECK(p.re == 0);
  CHECK(p.im == 1);

  // identity element
  p = basis_product(Basis::One, Basis::Pseudo);
  CHECK(p.unit == Basis::Pseudo);
  CHECK(p.re == 1);

  // EE = 1
  p = basis_product(Basis::Pseudo, Basis::Pseudo);
  CHECK(p.unit == Basis::One);
  CHECK(p.re == 1);

  // jI = -Ij = -xi k
  p = basis_product(Basis::PolarY, Basis::AxialX);
  CHECK(p.unit == Basis::PolarZ);
  CHECK(p.re == 0);
  CHECK(p.im == -1);

  // total on all 64 pairs with coefficient in {+-1, +-xi}
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto q = basis_product(static_cast<Basis>(a), static_cast<Basis>(b));
      CHECK(std::abs(q.re) + std::abs(q.im) == 1);
    }
}

TEST_CASE("unit squares, pseudoscalar commutation, anticommutation") {
  for (int k = 1; k < 8; ++k) {
    const Basis b = static_cast<Basis>(k);
    CHECK(multiply(u(b), u(b)) == u(Basis::One));
  }
  for (int k = 0; k < 8; ++k) {
    const Basis b = static_cast<Basis>(k);
    CHECK(multiply(u(Basis::Pseudo), u(b)) == multiply(u(b), u(Basis::Pseudo)));
  }
  const Basis vecs[6] = {Basis::PolarX, Basis::PolarY, Basis::PolarZ,
                         Basis::AxialX, Basis::AxialY, Basis::AxialZ};
  for (Basis a : vecs)
    for (Basis b : vecs) {
      if (detail::axis_of(a) == detail::axis_of(b)) continue;
      CHECK(multiply(u(a), u(b)) == scale(-1.0, multiply(u(b), u(a))));
    }
  // parallel polar/axial pairs commute: iI = Ii etc.
  CHECK(multiply(u(Basis::PolarX), u(Basis::AxialX)) ==
        multiply(u(Basis::AxialX), u(Basis::PolarX)));
}

TEST_CASE("E = -xi i j k") {
  const Octon ijk =
      multiply(multiply(u(Basis::PolarX), u(Basis::PolarY)), u(Basis::PolarZ));
  CHECK(scale(-kXi, ijk) == u(Basis::Pseudo));
}

TEST_CASE("associativity is exact on all 512 basis triples") {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        const Octon oa = u(static_cast<Basis>(a));
        const Octon ob = u(static_cast<Basis>(b));
        const Octon oc = u(static_cast<Basis>(c));
        CHECK(multiply(multiply(oa, ob), oc) == multiply(oa, multiply(ob, oc)));
      }
}

TEST_CASE("multiply expands bilinearly") {
  // (i + 2j)(3k) = xi (6I - 3J)
  Octon a = u(Basis::PolarX);
  a[Basis::PolarY] = 2.0;
  const Octon b = Octon::unit(Basis::PolarZ, 3.0);
  Octon expected;
  expected[Basis::AxialX] = Complex{0.0, 6.0};
  expected[Basis::AxialY] = Complex{0.0, -3.0};
  CHECK(multiply(a, b) == expected);

  std::mt19937_64 rng(11);
  const Octon x = random_octon(rng);
  CHECK(multiply(x, Octon{}) == Octon{});
  CHECK(multiply(Octon{}, x) == Octon{});
}

TEST_CASE("linear structure") {
  CHECK(add(u(Basis::PolarX), scale(-1.0, u(Basis::PolarX))) == Octon{});
  CHECK(scale(kXi, u(Basis::AxialZ)) == Octon::unit(Basis::AxialZ, kXi));
  Octon e2;
  e2[Basis::PolarX] = 2.0;
  e2[Basis::Pseudo] = 2.0;
  CHECK(scale(2.0, add(u(Basis::PolarX), u(Basis::Pseudo))) == e2);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const Octon a = random_octon(rng), b = random_octon(rng),
                c = random_octon(rng);
    const Complex alpha{0.3, -0.8}, beta{1.7, 0.2};
    const Octon lhs = multiply(add(scale(alpha, a), scale(beta, b)), c);
    const Octon rhs =
        add(scale(alpha, multiply(a, c)), scale(beta, multiply(b, c)));
    CHECK(close(lhs, rhs));
  }
}

TEST_CASE("spatial inversion") {
  Octon a = Octon::scalar(1.0);
  a[Basis::PolarX] = 1.0;
  a[Basis::Pseudo] = 1.0;
  a[Basis::AxialX] = 1.0;
  Octon expect = Octon::scalar(1.0);
  expect[Basis::PolarX] = -1.0;
  expect[Basis::Pseudo] = -1.0;
  expect[Basis::AxialX] = 1.0;
  CHECK(spatial_inversion(a) == expect);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const Octon x = random_octon(rng), y = random_octon(rng);
    CHECK(spatial_inversion(spatial_inversion(x)) == x);
    CHECK(close(spatial_inversion(multiply(x, y)),
                multiply(spatial_inversion(x), spatial_inversion(y)), 0.0));
  }
  // R(ij) = R(i) R(j) = xi K either way
  CHECK(spatial_inversion(multiply(u(Basis::PolarX), u(Basis::PolarY))) ==
        multiply(spatial_inversion(u(Basis::PolarX)),
                 spatial_inversion(u(Basis::PolarY))));
}

TEST_CASE("complex conjugation") {
  CHECK(complex_conjugate(Octon::unit(Basis::AxialZ, kXi)) ==
        Octon::unit(Basis::AxialZ, -kXi));
  // ij = xi K is purely imaginary, so conjugation flips it
  const Octon ij = multiply(u(Basis::PolarX), u(Basis::PolarY));
  CHECK(complex_conjugate(ij) == scale(-1.0, ij));

  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const Octon x = random_octon(rng);
    CHECK(complex_conjugate(complex_conjugate(x)) == x);
  }

  // Real polar vectors: conjugation flips the vector product and fixes
  // the scalar product.
  for (int t = 0; t < 20; ++t) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Octon v1, v2;
    for (std::size_t k = 1; k <= 3; ++k) {
      v1[k] = unif(rng);
      v2[k] = unif(rng);
    }
    const Octon vp = vector_product(v1, v2);
    const Octon sp = scalar_product(v1, v2);
    CHECK(complex_conjugate(vp) == scale(-1.0, vp));
    CHECK(complex_conjugate(sp) == sp);
  }
}

TEST_CASE("grade split and selection") {
  Octon a = Octon::scalar(2.0);
  a[Basis::PolarX] = 3.0;
  a[Basis::Pseudo] = 5.0;
  a[Basis::AxialZ] = 7.0;
  const GradedParts g = grade_split(a);
  CHECK(g.scalar == Complex{2.0});
  CHECK(g.vector[0] == Complex{3.0});
  CHECK(g.vector[1] == Complex{});
  CHECK(g.pseudoscalar == Complex{5.0});
  CHECK(g.pseudovector[2] == Complex{7.0});
  CHECK(g.reassemble() == a);

  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    const Octon x = random_octon(rng);
    const Octon sum = add(add(grade_select(x, Grade::Scalar),
                              grade_select(x, Grade::Vector)),
                          add(grade_select(x, Grade::Pseudoscalar),
                              grade_select(x, Grade::Pseudovector)));
    CHECK(sum == x);
  }

  // Products of polar vectors carry only scalar and pseudovector grades.
  for (int t = 0; t < 20; ++t) {
    const Octon v1 = random_vector_octon(rng, true, false);
    const Octon v2 = random_vector_octon(rng, true, false);
    const GradedParts gp = grade_split(multiply(v1, v2));
    CHECK(gp.vector == std::array<Complex, 3>{});
    CHECK(gp.pseudoscalar == Complex{});
  }
}

TEST_CASE("scalar and vector products") {
  // (i + 2j, 3j) = 6
  Octon v1 = u(Basis::PolarX);
  v1[Basis::PolarY] = 2.0;
  const Octon v2 = Octon::unit(Basis::PolarY, 3.0);
  CHECK(scalar_product(v1, v2) == Octon::scalar(6.0));

  CHECK(vector_product(u(Basis::PolarX), u(Basis::PolarY)) ==
        Octon::unit(Basis::AxialZ, kXi));

  CHECK(scalar_product(u(Basis::PolarX), u(Basis::AxialX)) == u(Basis::Pseudo));

  std::mt19937_64 rng(16);
  for (int t = 0; t < 50; ++t) {
    const Octon a = random_vector_octon(rng, true, true);
    const Octon b = random_vector_octon(rng, true, true);
    CHECK(add(scalar_product(a, b), vector_product(a, b)) == multiply(a, b));
  }

  CHECK_THROWS_AS(scalar_product(Octon::scalar(1.0), u(Basis::PolarX)),
                  std::invalid_argument);
  CHECK_THROWS_AS(vector_product(u(Basis::PolarX), u(Basis::Pseudo)),
                  std::invalid_argument);
}

TEST_CASE("left and right unit products match the full multiply") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const Octon x = random_octon(rng);
    for (int k = 0; k < 8; ++k) {
      const Basis b = static_cast<Basis>(k);
      CHECK(unit_multiply(b, x) == multiply(u(b), x));
      CHECK(multiply_unit(x, b) == multiply(x, u(b)));
    }
  }
}

TEST_CASE("Gibbs correspondence") {
  // [V1, V2] = xi E (V1 x V2) for V1 = x-hat, V2 = y-hat
  CHECK(gibbs_correspondence_residual(u(Basis::PolarX), u(Basis::PolarY)) ==
        0.0);

  // (V, P) = E (V . P) = 32 E
  Octon v, p;
  v[Basis::PolarX] = 1.0;
  v[Basis::PolarY] = 2.0;
  v[Basis::PolarZ] = 3.0;
  p[Basis::AxialX] = 4.0;
  p[Basis::AxialY] = 5.0;
  p[Basis::AxialZ] = 6.0;
  CHECK(scalar_product(v, p) == Octon::unit(Basis::Pseudo, 32.0));
  CHECK(gibbs_correspondence_residual(v, p) == 0.0);

  std::mt19937_64 rng(18);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Octon a = random_vector_octon(rng, true, true);
    const Octon b = random_vector_octon(rng, true, true);
    worst = std::max(worst, gibbs_correspondence_residual(a, b));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("verify_algebra suite passes and catches corruption") {
  VerifyOptions opt;
  opt.random_samples = 500;
  opt.gibbs_samples = 200;
  const VerifyReport good = verify_algebra(opt);
  CHECK(good.pass());

  opt.corrupt_table = true;  // flips (i, j)
  const VerifyReport bad = verify_algebra(opt);
  CHECK_FALSE(bad.pass());
  bool names_pair = false;
  for (const auto& c : bad.checks)
    if (!c.pass && c.detail.find("(i,j)") != std::string::npos)
      names_pair = true;
  CHECK(names_pair);
}

#include "doctest.h"

#include <random>

#include "octoem/matrix_rep.hpp"
#include "octoem/scenarios.hpp"

using namespace octoem;

TEST_CASE("representation is multiplicative and injective") {
  const RepCheck check = verify_representation();
  CHECK(check.multiplicative);
  CHECK(check.injective);
}

TEST_CASE("basis relations hold in the representation") {
  // rep(E)^2 = rep(1)
  const MatrixPair e = basis_rep(Basis::Pseudo);
  CHECK(pair_mul(e, e) == basis_rep(Basis::One));

  // rep(i) rep(j) = rep(xi K) slot by slot
  const MatrixPair ij =
      pair_mul(basis_rep(Basis::PolarX), basis_rep(Basis::PolarY));
  const MatrixPair xik = to_matrix_pair(Octon::unit(Basis::AxialZ, {0.0, 1.0}));
  CHECK(ij == xik);
}

TEST_CASE("round trip through the representation") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Octon a = random_octon(rng);
    const Octon back = from_matrix_pair(to_matrix_pair(a));
    CHECK(linf_norm(back - a) <= 1e-14 * std::max(1.0, linf_norm(a)));
  }
}

TEST_CASE("multiply agrees with the oracle on random octons") {
  std::mt19937_64 rng(22);
  double worst = 0.0;
  for (int t = 0; t < 2000; ++t) {
    const Octon a = random_octon(rng);
    const Octon b = random_octon(rng);
    const Octon direct = multiply(a, b);
    const Octon via_rep =
        from_matrix_pair(pair_mul(to_matrix_pair(a), to_matrix_pair(b)));
    const double scale = std::max(1.0, linf_norm(a) * linf_norm(b));
    worst = std::max(worst, linf_norm(direct - via_rep) / scale);
  }
  CHECK(worst <= 1e-12);
}

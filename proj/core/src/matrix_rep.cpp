#include "octoem/matrix_rep.hpp"

#include <cmath>

namespace octoem {

namespace {

const Complex kXi{0.0, 1.0};

Mat2 sigma(int axis) {
  switch (axis) {
    case 0: return {{0.0, 1.0, 1.0, 0.0}};
    case 1: return {{0.0, -kXi, kXi, 0.0}};
    default: return {{1.0, 0.0, 0.0, -1.0}};
  }
}

}  // namespace

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

Mat2 mat_add(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

Mat2 mat_scale(Complex s, const Mat2& a) {
  Mat2 r;
  for (int k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
  return r;
}

Mat2 mat_neg(const Mat2& a) {
  Mat2 r;
  for (int k = 0; k < 4; ++k) r.m[k] = neg(a.m[k]);
  return r;
}

double mat_linf(const Mat2& a) {
  double m = 0.0;
  for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(a.m[k]));
  return m;
}

MatrixPair pair_mul(const MatrixPair& a, const MatrixPair& b) {
  return {mat_mul(a.plus, b.plus), mat_mul(a.minus, b.minus)};
}

double pair_linf(const MatrixPair& a) {
  return std::max(mat_linf(a.plus), mat_linf(a.minus));
}

MatrixPair basis_rep(Basis u) {
  switch (u) {
    case Basis::One: return {Mat2::identity(), Mat2::identity()};
    case Basis::Pseudo: return {Mat2::identity(), mat_neg(Mat2::identity())};
    case Basis::PolarX: return {sigma(0), mat_neg(sigma(0))};
    case Basis::PolarY: return {sigma(1), mat_neg(sigma(1))};
    case Basis::PolarZ: return {sigma(2), mat_neg(sigma(2))};
    case Basis::AxialX: return {sigma(0), sigma(0)};
    case Basis::AxialY: return {sigma(1), sigma(1)};
    case Basis::AxialZ: return {sigma(2), sigma(2)};
  }
  return {};
}

MatrixPair to_matrix_pair(const Octon& a) {
  MatrixPair r;
  for (std::size_t k = 0; k < 8; ++k) {
    const Complex c = a[k];
    if (c == Complex{}) continue;
    const MatrixPair b = basis_rep(static_cast<Basis>(k));
    r.plus = mat_add(r.plus, mat_scale(c, b.plus));
    r.minus = mat_add(r.minus, mat_scale(c, b.minus));
  }
  return r;
}

Octon from_matrix_pair(const MatrixPair& p) {
  // Basis images are orthogonal with squared norm 4 under the Frobenius
  // inner product over the pair, so the coefficients are plain projections.
  Octon r;
  for (std::size_t k = 0; k < 8; ++k) {
    const MatrixPair b = basis_rep(static_cast<Basis>(k));
    Complex inner = 0.0;
    for (int e = 0; e < 4; ++e) {
      inner += std::conj(b.plus.m[e]) * p.plus.m[e];
      inner += std::conj(b.minus.m[e]) * p.minus.m[e];
    }
    r[k] = inner * 0.25;
  }
  return r;
}

RepCheck verify_representation() {
  RepCheck check;
  for (int u = 0; u < 8 && check.multiplicative; ++u) {
    for (int v = 0; v < 8; ++v) {
      const Basis bu = static_cast<Basis>(u);
      const Basis bv = static_cast<Basis>(v);
      const UnitProduct p = basis_product(bu, bv);
      const MatrixPair lhs = pair_mul(basis_rep(bu), basis_rep(bv));
      const Complex coeff{static_cast<double>(p.re), static_cast<double>(p.im)};
      const MatrixPair img = basis_rep(p.unit);
      const MatrixPair rhs{mat_scale(coeff, img.plus), mat_scale(coeff, img.minus)};
      // Entries are exact small Gaussian integers; require equality.
      if (!(lhs == rhs)) {
        check.multiplicative = false;
        check.failed_u = bu;
        check.failed_v = bv;
        break;
      }
    }
  }

  // Rank of the 8 flattened basis images via Gaussian elimination.
  std::array<std::array<Complex, 8>, 8> rows{};
  for (std::size_t k = 0; k < 8; ++k) {
    const MatrixPair b = basis_rep(static_cast<Basis>(k));
    for (int e = 0; e < 4; ++e) {
      rows[k][static_cast<std::size_t>(e)] = b.plus.m[e];
      rows[k][static_cast<std::size_t>(4 + e)] = b.minus.m[e];
    }
  }
  int rank = 0;
  for (std::size_t col = 0; col < 8 && rank < 8; ++col) {
    std::size_t pivot = 8;
    double best = 1e-9;
    for (std::size_t r = static_cast<std::size_t>(rank); r < 8; ++r) {
      const double mag = std::abs(rows[r][col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (pivot == 8) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < 8; ++r) {
      const Complex f = rows[r][col] / prow[col];
      for (std::size_t c2 = col; c2 < 8; ++c2) rows[r][c2] -= f * prow[c2];
    }
    ++rank;
  }
  check.injective = (rank == 8);
  return check;
}

}  // namespace octoem

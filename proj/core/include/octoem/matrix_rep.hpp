#ifndef OCTOEM_MATRIX_REP_HPP
#define OCTOEM_MATRIX_REP_HPP

#include <array>

#include "octoem/octon.hpp"

namespace octoem {

/// 2x2 complex matrix, row major.
struct Mat2 {
  std::array<Complex, 4> m{};

  static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

  bool operator==(const Mat2&) const = default;
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_add(const Mat2& a, const Mat2& b);
Mat2 mat_scale(Complex s, const Mat2& a);
Mat2 mat_neg(const Mat2& a);
double mat_linf(const Mat2& a);

/// Faithful representation of an octon as two 2x2 complex matrices, one
/// per central idempotent of the pseudoscalar unit. Used purely as an
/// independent oracle for the product table: the representation is
/// multiplicative slot by slot, which verify_representation() checks
/// over all 64 basis pairs before the oracle is relied on.
struct MatrixPair {
  Mat2 plus;
  Mat2 minus;

  bool operator==(const MatrixPair&) const = default;
};

MatrixPair pair_mul(const MatrixPair& a, const MatrixPair& b);
double pair_linf(const MatrixPair& a);

/// Image of a basis unit. The polar units map to (sigma, -sigma), the
/// axial units to (sigma, sigma) and the pseudoscalar to (Id, -Id);
/// sigma are the standard spin matrices with sigma1*sigma2 = xi*sigma3.
MatrixPair basis_rep(Basis u);

/// Linear extension of basis_rep.
MatrixPair to_matrix_pair(const Octon& a);

/// Inverse of to_matrix_pair on its image (trace inner product).
Octon from_matrix_pair(const MatrixPair& p);

struct RepCheck {
  bool multiplicative = true;   ///< rep(uv) == rep(u)rep(v) for all 64 pairs
  bool injective = true;        ///< the 8 basis images are linearly independent
  Basis failed_u = Basis::One;  ///< first failing pair when not multiplicative
  Basis failed_v = Basis::One;
};

/// Verifies the representation itself; run before trusting the oracle.
RepCheck verify_representation();

}  // namespace octoem

#endif  // OCTOEM_MATRIX_REP_HPP

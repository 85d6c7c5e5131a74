#ifndef OCTOEM_MATTER_HPP
#define OCTOEM_MATTER_HPP

#include "octoem/electrodynamics.hpp"

namespace octoem {

/// The four real fields of electrodynamics in a medium. E and D are
/// polar, H and B axial; all share one grid.
struct MatterFields {
  Vec3Field E, D, H, B;
};

struct MatterSlice {
  MatterFields value, dt;
};

/// Homogeneous isotropic closure D = eps E, B = mu H.
struct ConstitutiveModel {
  double epsilon = 1.0;
  double mu = 1.0;

  ConstitutiveModel() = default;
  ConstitutiveModel(double eps, double mu_) : epsilon(eps), mu(mu_) {
    if (!(epsilon > 0.0) || !(mu > 0.0))
      throw std::invalid_argument("ConstitutiveModel: eps and mu must be positive");
  }

  /// Builds (E, D, H, B) from E and H.
  MatterFields close(const Vec3Field& E, const Vec3Field& H) const;
};

/// The three matter octons: F_EB = -E + xi B, F_DH = -D + xi H and the
/// combined F0 = xi H - xi E - B - D. Construction asserts the linear
/// identity F0 = xi F_EB + F_DH bitwise.
struct MatterOctons {
  OctonField f_eb, f_dh, f0;
};

MatterOctons build_octons(const MatterFields& m);

OctonField f_eb_octon(const Vec3Field& E, const Vec3Field& B);
OctonField f_dh_octon(const Vec3Field& D, const Vec3Field& H);
OctonField f0_octon(const MatterFields& m);

/// Conjugation extraction of the first pair: grade content of
/// P+ F_EB - (P+ F_EB)* is exactly {pseudoscalar, pseudovector}; the
/// scalar and vector grades cancel identically for real fields (checked).
/// Returns div B and rot E + (1/c) dB/dt, cross-checked classically.
struct FirstPairResiduals {
  ScalarField div_b;
  Vec3Field faraday;
  double extraction_defect;  ///< max |scalar/vector grade| of the extraction
  double path_defect;        ///< octonic vs classical
};
FirstPairResiduals first_pair_residual(const MatterSlice& m,
                                       const UnitsConfig& units);

/// Conjugation extraction of the second pair: P+ F_DH + (P+ F_DH)* - 2J.
/// Returns div D - 4 pi rho and rot H - (4 pi/c) j - (1/c) dD/dt.
struct SecondPairResiduals {
  ScalarField gauss;
  Vec3Field ampere;
  double extraction_defect;
  double path_defect;
};
SecondPairResiduals second_pair_residual(const MatterSlice& m,
                                         const CurrentField& cur,
                                         const UnitsConfig& units);

/// Combined equation: Re{P+ F0} - J, grade-split into the four matter
/// Maxwell residuals (div B, Faraday, Gauss, Ampere normal forms).
/// Equals the union of the two pair extractions bitwise, which is
/// asserted; RelationResiduals carries scalar=Gauss, vector=Ampere,
/// pseudoscalar=div B, pseudovector=Faraday.
RelationResiduals combined_residual(const MatterSlice& m, const CurrentField& cur,
                                    const UnitsConfig& units);

}  // namespace octoem

#endif  // OCTOEM_MATTER_HPP

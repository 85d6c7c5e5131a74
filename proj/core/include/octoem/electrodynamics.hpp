#ifndef OCTOEM_ELECTRODYNAMICS_HPP
#define OCTOEM_ELECTRODYNAMICS_HPP

#include "octoem/field_ops.hpp"
#include "octoem/grid.hpp"
#include "octoem/real_fields.hpp"

namespace octoem {

struct UnitsConfig {
  double c = 1.0;  ///< speed of light, Gaussian units

  UnitsConfig() = default;
  explicit UnitsConfig(double c_) : c(c_) {
    if (!(c > 0.0)) throw std::invalid_argument("UnitsConfig: c must be positive");
  }
};

/// Scalar plus vector potential; the incomplete four-component octon.
struct PotentialField {
  ScalarField phi;
  Vec3Field A;
};

/// Potential with analytic first and second time derivatives.
struct PotentialSlice2 {
  PotentialField value, dt, dtt;
};

/// Charge and current density; octon view is 4 pi rho + (4 pi / c) j.
struct CurrentField {
  ScalarField rho;
  Vec3Field j;
};

struct CurrentSlice {
  CurrentField value, dt;
};

/// Real electric (polar) and magnetic (axial) fields. The octon view
/// F = -E + xi H applies the xi factor at construction time only.
struct EMField {
  Vec3Field E, H;
};

struct EMSlice {
  EMField value, dt;
};

struct EMSlice2 {
  EMField value, dt, dtt;
};

OctonField potential_octon(const PotentialField& p);
OctonField current_octon(const CurrentField& cur, const UnitsConfig& units);
OctonField field_octon(const EMField& f);
TimeSlice field_octon_slice(const EMSlice& f);

/// One residual field per grade of an identity, already unpacked to the
/// classical (real) normal forms.
struct RelationResiduals {
  ScalarField scalar;
  Vec3Field vector;
  ScalarField pseudoscalar;
  Vec3Field pseudovector;
};

struct RelationNorms {
  Norms scalar, vector, pseudoscalar, pseudovector;
  double max_linf() const;
};
RelationNorms norms_of(const RelationResiduals& r);
RelationNorms norms_of_interior(const RelationResiduals& r, int band);

// --- potentials to fields -------------------------------------------------

struct FieldFromPotentials {
  EMField field;              ///< E = -(1/c) dA/dt - grad phi, H = rot A
  ScalarField lorenz_gauge;   ///< (1/c) dphi/dt + div A, reported not enforced
  double octonic_defect;      ///< max |p_apply(Pi) - (-E + xi H + gauge)|
};

/// Derives fields from a potential slice by the classical formulas and
/// cross-checks that the octonic differentiation produces the same
/// octon up to the gauge scalar. Throws std::runtime_error if the two
/// routes disagree beyond 1e-12 (scaled).
FieldFromPotentials field_from_potentials(const PotentialField& value,
                                          const PotentialField& dt,
                                          const UnitsConfig& units);

// --- generalized equation --------------------------------------------------

struct GeneralizedEquationResiduals {
  OctonField composed;  ///< P+ P Pi - J by operator composition
  OctonField wave;      ///< ((1/c^2) dtt - Lap7) Pi - J
  OctonField dropped;   ///< wave - composed: the discretely retained [nabla,nabla] Pi
};

GeneralizedEquationResiduals generalized_equation_residual(
    const PotentialSlice2& pot, const CurrentField& cur, const UnitsConfig& units);

// --- Maxwell system ---------------------------------------------------------

struct MaxwellResiduals {
  RelationResiduals residuals;  ///< Gauss, Ampere, div H, Faraday normal forms
  OctonField octon_residual;    ///< P+ F - J before grade unpacking
  double path_defect;           ///< octonic vs classical max discrepancy
};

/// Grade-split residuals of the octonic Maxwell equation, checked
/// against independently coded classical residuals to 1e-12 (scaled).
MaxwellResiduals maxwell_residual(const EMSlice& f, const CurrentField& cur,
                                  const UnitsConfig& units);

/// Rebuilds the full octon residual from the unpacked grades; bitwise
/// inverse of the unpacking in maxwell_residual.
OctonField reassemble_maxwell_octon(const RelationResiduals& r,
                                    const UnitsConfig& units);

// --- energy, momentum and invariant relations -------------------------------

struct DualPathResiduals {
  RelationResiduals octonic;    ///< grade split of the octonic product, normalized
  RelationResiduals classical;  ///< independent classical vector calculus
  double agreement;             ///< max componentwise |octonic - classical|
  double scale;                 ///< magnitude scale used for tolerance checks
};

/// Left-multiplies the Maxwell residual octon by (E + xi H) and splits
/// grades into the Poynting theorem, its corollary, the momentum
/// relation and the pseudovector relation, in their classical normal
/// forms; computes the same four residuals classically.
DualPathResiduals power_relations_paths(const EMSlice& f, const CurrentField& cur,
                                        const UnitsConfig& units);

/// Same with left factor (xi H - E): both Lorentz invariant relations,
/// the gradient relation of the first invariant and the gradient of the
/// second invariant.
DualPathResiduals lorentz_invariant_relations_paths(const EMSlice& f,
                                                    const CurrentField& cur,
                                                    const UnitsConfig& units);

/// Convenience wrappers asserting path agreement to 1e-11 (scaled).
RelationResiduals power_relations(const EMSlice& f, const CurrentField& cur,
                                  const UnitsConfig& units);
RelationResiduals lorentz_invariant_relations(const EMSlice& f,
                                              const CurrentField& cur,
                                              const UnitsConfig& units);

// --- field wave equations ----------------------------------------------------

enum class LaplacianSign {
  Standard,     ///< (1/c^2) dtt - Lap, the form plane waves satisfy
  PrintedPlus,  ///< (1/c^2) dtt + Lap, kept for the falsification study
};

struct WaveResiduals {
  Vec3Field waveE;        ///< (1/c^2) dttE -/+ Lap E + 4 pi grad rho + (4 pi / c^2) dt j
  Vec3Field waveH;        ///< (1/c^2) dttH -/+ Lap H - (4 pi / c) rot j
  ScalarField continuity; ///< dt rho + div j
};

WaveResiduals field_wave_residuals(const EMSlice2& f, const CurrentSlice& cur,
                                   const UnitsConfig& units,
                                   LaplacianSign sign = LaplacianSign::Standard);

// --- pointwise invariants ------------------------------------------------------

struct InvariantFields {
  ScalarField energy;    ///< (E^2 + H^2) / 8 pi
  Vec3Field poynting;    ///< (c / 4 pi) E x H
  ScalarField inv1;      ///< (E^2 - H^2) / 8 pi
  ScalarField inv2;      ///< E . H
};

InvariantFields invariant_scalars(const EMField& f, const UnitsConfig& units);

}  // namespace octoem

#endif  // OCTOEM_ELECTRODYNAMICS_HPP

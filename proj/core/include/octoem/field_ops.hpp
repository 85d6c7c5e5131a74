#ifndef OCTOEM_FIELD_OPS_HPP
#define OCTOEM_FIELD_OPS_HPP

#include "octoem/grid.hpp"

namespace octoem {

struct Norms {
  double linf = 0.0;
  double l2 = 0.0;
};

/// Centered second-order difference along one axis with periodic wrap,
/// applied componentwise to all eight coefficients.
OctonField partial(const OctonField& f, int axis);

/// Left octonic multiplication by the gradient operator:
/// sum over axes of unit(axis) * partial(f, axis). On a pure vector
/// field this produces div in the scalar grade and xi*rot in the
/// pseudovector grade; on an axial field, div lands in the pseudoscalar
/// grade and xi*rot in the vector grade.
OctonField nabla_apply(const OctonField& f);

/// Standard 7-point second-order stencil per component.
OctonField laplacian(const OctonField& f);

/// (1/c) d/dt + nabla, operator acting from the left.
OctonField p_apply(const TimeSlice& slice, double c);

/// (1/c) d/dt - nabla.
OctonField p_conj_apply(const TimeSlice& slice, double c);

/// Max modulus over all components plus grid-weighted L2 norm,
/// accumulated in a fixed serial order.
Norms field_norms(const OctonField& f);

/// Same, restricted to sites at least `band` cells away from the wrap
/// seam on every axis. Used with non-periodic analytic probes.
Norms field_norms_interior(const OctonField& f, int band);

// Linear structure on octon fields.
OctonField field_add(const OctonField& a, const OctonField& b);
OctonField field_sub(const OctonField& a, const OctonField& b);
OctonField field_scale(Complex s, const OctonField& a);
OctonField field_scale(double s, const OctonField& a);
OctonField field_conjugate(const OctonField& a);
/// Pointwise octon product a(x) * b(x).
OctonField field_multiply(const OctonField& a, const OctonField& b);

/// Shifts a field by one lattice site along an axis (periodically).
OctonField field_shift(const OctonField& a, int axis, int offset);

/// div and rot of a real 3-vector field extracted from one octonic
/// differentiation, doing the xi bookkeeping of the correspondence
/// rules. `axial` selects which vector slot of the octon carries the
/// input. Equivalent, coefficient for coefficient, to embedding the
/// field and calling nabla_apply.
struct VectorAnalysis {
  ScalarField div;
  Vec3Field rot;
};
struct NablaWorkspace {
  OctonField embedded;
  OctonField image;
  OctonField scratch;
};

/// In-place variants reusing caller buffers (resized on grid change).
void partial_into(const OctonField& f, int axis, OctonField& out);
void nabla_apply_into(const OctonField& f, OctonField& out, OctonField& scratch);
VectorAnalysis octonic_vector_analysis(const Vec3Field& v, bool axial,
                                       NablaWorkspace* ws = nullptr);

/// Same, writing into preallocated outputs (resized on grid change).
void octonic_vector_analysis_into(const Vec3Field& v, bool axial,
                                  ScalarField& div, Vec3Field& rot,
                                  NablaWorkspace& ws);

}  // namespace octoem

#endif  // OCTOEM_FIELD_OPS_HPP

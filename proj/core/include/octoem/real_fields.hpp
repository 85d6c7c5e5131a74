#ifndef OCTOEM_REAL_FIELDS_HPP
#define OCTOEM_REAL_FIELDS_HPP

#include "octoem/field_ops.hpp"
#include "octoem/grid.hpp"

namespace octoem {

// Classical vector calculus on real fields with the same centered
// second-order periodic stencils, coded directly on components. This is
// the independent path checked against the octonic operators; it never
// touches the octon product table.

ScalarField divergence(const Vec3Field& v);
Vec3Field curl(const Vec3Field& v);
Vec3Field gradient(const ScalarField& f);
ScalarField scalar_laplacian(const ScalarField& f);
Vec3Field vector_laplacian(const Vec3Field& v);

// Pointwise algebra.
ScalarField dot(const Vec3Field& a, const Vec3Field& b);
Vec3Field cross(const Vec3Field& a, const Vec3Field& b);
Vec3Field vmul(const ScalarField& s, const Vec3Field& v);

ScalarField sadd(const ScalarField& a, const ScalarField& b);
ScalarField ssub(const ScalarField& a, const ScalarField& b);
ScalarField sscale(double s, const ScalarField& a);
Vec3Field vadd(const Vec3Field& a, const Vec3Field& b);
Vec3Field vsub(const Vec3Field& a, const Vec3Field& b);
Vec3Field vscale(double s, const Vec3Field& a);

/// out = sum of coeff[t] * term[t]; preallocated output, fixed order.
void vlincomb(Vec3Field& out, std::initializer_list<double> coeffs,
              std::initializer_list<const Vec3Field*> terms);

Norms scalar_norms(const ScalarField& f);
Norms vec3_norms(const Vec3Field& f);
Norms scalar_norms_interior(const ScalarField& f, int band);
Norms vec3_norms_interior(const Vec3Field& f, int band);

/// Grid-weighted integral, fixed serial accumulation order.
double integrate(const ScalarField& f);
Vec3 integrate(const Vec3Field& f);

bool all_finite(const Vec3Field& f);

}  // namespace octoem

#endif  // OCTOEM_REAL_FIELDS_HPP

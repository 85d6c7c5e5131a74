#ifndef OCTOEM_GIBBS_HPP
#define OCTOEM_GIBBS_HPP

#include <array>

#include "octoem/octon.hpp"

namespace octoem {

/// Classical Gibbs-algebra side of the correspondence rules: plain dot
/// and cross products on coefficient triples, independent of the octon
/// product table.
using CVec3 = std::array<Complex, 3>;

Complex gibbs_dot(const CVec3& a, const CVec3& b);
CVec3 gibbs_cross(const CVec3& a, const CVec3& b);

CVec3 polar_part(const Octon& a);
CVec3 axial_part(const Octon& a);

/// Octon with the given polar coefficients.
Octon polar_octon(const CVec3& v);
/// Octon with the given axial coefficients.
Octon axial_octon(const CVec3& p);

/// Builds the classically predicted scalar product of two pure
/// vector/pseudovector octons: dot products of like parts land in the
/// scalar grade, mixed parts in the pseudoscalar grade.
Octon classical_scalar_product(const Octon& v1, const Octon& v2);

/// Classically predicted vector product: xi E (cross) for like parts,
/// xi (cross) for mixed parts.
Octon classical_vector_product(const Octon& v1, const Octon& v2);

/// Max componentwise discrepancy between the octonic scalar/vector
/// products and their classical predictions; zero in exact arithmetic.
double gibbs_correspondence_residual(const Octon& v1, const Octon& v2);

}  // namespace octoem

#endif  // OCTOEM_GIBBS_HPP

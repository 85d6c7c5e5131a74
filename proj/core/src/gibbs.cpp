#include "octoem/gibbs.hpp"

#include <algorithm>
#include <cmath>

namespace octoem {

Complex gibbs_dot(const CVec3& a, const CVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

CVec3 gibbs_cross(const CVec3& a, const CVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

CVec3 polar_part(const Octon& a) {
  return {a[Basis::PolarX], a[Basis::PolarY], a[Basis::PolarZ]};
}

CVec3 axial_part(const Octon& a) {
  return {a[Basis::AxialX], a[Basis::AxialY], a[Basis::AxialZ]};
}

Octon polar_octon(const CVec3& v) {
  Octon o;
  o[Basis::PolarX] = v[0];
  o[Basis::PolarY] = v[1];
  o[Basis::PolarZ] = v[2];
  return o;
}

Octon axial_octon(const CVec3& p) {
  Octon o;
  o[Basis::AxialX] = p[0];
  o[Basis::AxialY] = p[1];
  o[Basis::AxialZ] = p[2];
  return o;
}

Octon classical_scalar_product(const Octon& v1, const Octon& v2) {
  const CVec3 V1 = polar_part(v1), P1 = axial_part(v1);
  const CVec3 V2 = polar_part(v2), P2 = axial_part(v2);
  Octon r;
  r[Basis::One] = gibbs_dot(V1, V2) + gibbs_dot(P1, P2);
  r[Basis::Pseudo] = gibbs_dot(V1, P2) + gibbs_dot(P1, V2);
  return r;
}

Octon classical_vector_product(const Octon& v1, const Octon& v2) {
  const CVec3 V1 = polar_part(v1), P1 = axial_part(v1);
  const CVec3 V2 = polar_part(v2), P2 = axial_part(v2);
  CVec3 ax = gibbs_cross(V1, V2);
  const CVec3 ax2 = gibbs_cross(P1, P2);
  CVec3 po = gibbs_cross(V1, P2);
  const CVec3 po2 = gibbs_cross(P1, V2);
  Octon r;
  for (int k = 0; k < 3; ++k) {
    ax[static_cast<std::size_t>(k)] += ax2[static_cast<std::size_t>(k)];
    po[static_cast<std::size_t>(k)] += po2[static_cast<std::size_t>(k)];
    r[static_cast<std::size_t>(5 + k)] = xi_times(ax[static_cast<std::size_t>(k)]);
    r[static_cast<std::size_t>(1 + k)] = xi_times(po[static_cast<std::size_t>(k)]);
  }
  return r;
}

double gibbs_correspondence_residual(const Octon& v1, const Octon& v2) {
  const Octon ds = scalar_product(v1, v2) - classical_scalar_product(v1, v2);
  const Octon dv = vector_product(v1, v2) - classical_vector_product(v1, v2);
  return std::max(linf_norm(ds), linf_norm(dv));
}

}  // namespace octoem

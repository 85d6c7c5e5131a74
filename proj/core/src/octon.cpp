#include "octoem/octon.hpp"

#include <cmath>
#include <sstream>

namespace octoem {

const char* basis_name(Basis u) {
  switch (u) {
    case Basis::One: return "1";
    case Basis::PolarX: return "i";
    case Basis::PolarY: return "j";
    case Basis::PolarZ: return "k";
    case Basis::Pseudo: return "E";
    case Basis::AxialX: return "I";
    case Basis::AxialY: return "J";
    case Basis::AxialZ: return "K";
  }
  return "?";
}

Octon multiply(const Octon& a, const Octon& b) {
  Octon r;
  for (std::size_t u = 0; u < 8; ++u) {
    const Complex au = a[u];
    if (au.real() == 0.0 && au.imag() == 0.0) continue;
    const UnitProduct* row = &detail::kProductTable[u * 8];
    for (std::size_t v = 0; v < 8; ++v) {
      const UnitProduct& p = row[v];
      r[static_cast<std::size_t>(p.unit)] += detail::apply_coeff(p, au * b[v]);
    }
  }
  return r;
}

Octon unit_multiply(Basis u, const Octon& a) {
  Octon r;
  const UnitProduct* row = &detail::kProductTable[static_cast<std::size_t>(u) * 8];
  for (std::size_t v = 0; v < 8; ++v) {
    const UnitProduct& p = row[v];
    r[static_cast<std::size_t>(p.unit)] = detail::apply_coeff(p, a[v]);
  }
  return r;
}

Octon multiply_unit(const Octon& a, Basis u) {
  Octon r;
  for (std::size_t v = 0; v < 8; ++v) {
    const UnitProduct& p =
        detail::kProductTable[v * 8 + static_cast<std::size_t>(u)];
    r[static_cast<std::size_t>(p.unit)] = detail::apply_coeff(p, a[v]);
  }
  return r;
}

Octon spatial_inversion(const Octon& a) {
  Octon r = a;
  for (std::size_t k = 1; k <= 4; ++k) r[k] = neg(a[k]);
  return r;
}

Octon complex_conjugate(const Octon& a) {
  Octon r;
  for (std::size_t k = 0; k < 8; ++k) r[k] = std::conj(a[k]);
  return r;
}

Octon GradedParts::reassemble() const {
  Octon r;
  r[Basis::One] = scalar;
  r[Basis::PolarX] = vector[0];
  r[Basis::PolarY] = vector[1];
  r[Basis::PolarZ] = vector[2];
  r[Basis::Pseudo] = pseudoscalar;
  r[Basis::AxialX] = pseudovector[0];
  r[Basis::AxialY] = pseudovector[1];
  r[Basis::AxialZ] = pseudovector[2];
  return r;
}

GradedParts grade_split(const Octon& a) {
  GradedParts g;
  g.scalar = a[Basis::One];
  g.vector = {a[Basis::PolarX], a[Basis::PolarY], a[Basis::PolarZ]};
  g.pseudoscalar = a[Basis::Pseudo];
  g.pseudovector = {a[Basis::AxialX], a[Basis::AxialY], a[Basis::AxialZ]};
  return g;
}

Octon grade_select(const Octon& a, Grade g) {
  Octon r;
  switch (g) {
    case Grade::Scalar:
      r[Basis::One] = a[Basis::One];
      break;
    case Grade::Vector:
      for (std::size_t k = 1; k <= 3; ++k) r[k] = a[k];
      break;
    case Grade::Pseudoscalar:
      r[Basis::Pseudo] = a[Basis::Pseudo];
      break;
    case Grade::Pseudovector:
      for (std::size_t k = 5; k <= 7; ++k) r[k] = a[k];
      break;
  }
  return r;
}

bool is_pure_vector(const Octon& a) {
  return a[Basis::One] == Complex{} && a[Basis::Pseudo] == Complex{};
}

namespace {
void require_pure(const Octon& a, const char* what) {
  if (!is_pure_vector(a)) {
    throw std::invalid_argument(std::string(what) +
                                ": operand has nonzero scalar or pseudoscalar "
                                "part; defined on pure vector/pseudovector "
                                "octons only");
  }
}
}  // namespace

Octon scalar_product(const Octon& v1, const Octon& v2) {
  require_pure(v1, "scalar_product");
  require_pure(v2, "scalar_product");
  const Octon m = multiply(v1, v2);
  Octon r;
  r[Basis::One] = m[Basis::One];
  r[Basis::Pseudo] = m[Basis::Pseudo];
  return r;
}

Octon vector_product(const Octon& v1, const Octon& v2) {
  require_pure(v1, "vector_product");
  require_pure(v2, "vector_product");
  const Octon m = multiply(v1, v2);
  Octon r;
  for (std::size_t k = 1; k <= 3; ++k) r[k] = m[k];
  for (std::size_t k = 5; k <= 7; ++k) r[k] = m[k];
  return r;
}

double linf_norm(const Octon& a) {
  double m = 0.0;
  for (std::size_t k = 0; k < 8; ++k) m = std::max(m, std::abs(a[k]));
  return m;
}

std::string to_string(const Octon& a) {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (std::size_t k = 0; k < 8; ++k) {
    const Complex z = a[k];
    if (z == Complex{}) continue;
    if (!first) os << " + ";
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "xi)"
       << basis_name(static_cast<Basis>(k));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace octoem

#ifndef OCTOEM_OCTON_HPP
#define OCTOEM_OCTON_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace octoem {

using Complex = std::complex<double>;

/// Basis units of the eight-component algebra, in canonical component
/// order: the scalar unit, three polar vector units, the pseudoscalar
/// unit and three axial vector units. Polar units flip sign under
/// spatial inversion, axial units do not; the pseudoscalar commutes
/// with every unit.
enum class Basis : std::uint8_t {
  One = 0,
  PolarX = 1,
  PolarY = 2,
  PolarZ = 3,
  Pseudo = 4,
  AxialX = 5,
  AxialY = 6,
  AxialZ = 7,
};

inline constexpr std::size_t kComponents = 8;

const char* basis_name(Basis u);

/// The four grade subspaces.
enum class Grade : std::uint8_t { Scalar, Vector, Pseudoscalar, Pseudovector };

// --- channel-exact complex helpers -------------------------------------
//
// Multiplication by the coefficient-field imaginary unit is an exact
// channel swap. Using it instead of a generic complex product keeps the
// real/imaginary channels of every kernel independent, which several
// bitwise identities in the matter equations rely on.

inline Complex xi_times(Complex z) { return {-z.imag(), z.real()}; }
inline Complex neg_xi_times(Complex z) { return {z.imag(), -z.real()}; }
inline Complex neg(Complex z) { return {-z.real(), -z.imag()}; }

/// Structure constant of a basis product: u * v = (re + xi*im) * unit,
/// with re + xi*im always one of {1, -1, xi, -xi}.
struct UnitProduct {
  std::int8_t re;
  std::int8_t im;
  Basis unit;
};

namespace detail {

constexpr bool is_polar(Basis u) {
  return u == Basis::PolarX || u == Basis::PolarY || u == Basis::PolarZ;
}
constexpr bool is_axial(Basis u) {
  return u == Basis::AxialX || u == Basis::AxialY || u == Basis::AxialZ;
}
constexpr int axis_of(Basis u) {
  switch (u) {
    case Basis::PolarX: case Basis::AxialX: return 0;
    case Basis::PolarY: case Basis::AxialY: return 1;
    case Basis::PolarZ: case Basis::AxialZ: return 2;
    default: return -1;
  }
}
constexpr Basis polar(int axis) { return static_cast<Basis>(1 + axis); }
constexpr Basis axial(int axis) { return static_cast<Basis>(5 + axis); }

// Product of two basis units, generated from the multiplication rules:
// unit squares are 1, nonparallel vector units anticommute, products of
// distinct same-species units give xi times the axial unit of the third
// axis, mixed-species products give the pseudoscalar (parallel) or xi
// times the polar unit of the third axis, and the pseudoscalar unit
// commutes with everything, squaring to 1 and exchanging polar with
// axial units.
constexpr UnitProduct unit_product(Basis u, Basis v) {
  if (u == Basis::One) return {1, 0, v};
  if (v == Basis::One) return {1, 0, u};
  if (u == Basis::Pseudo && v == Basis::Pseudo) return {1, 0, Basis::One};
  if (u == Basis::Pseudo) {
    return {1, 0, is_polar(v) ? axial(axis_of(v)) : polar(axis_of(v))};
  }
  if (v == Basis::Pseudo) {
    return {1, 0, is_polar(u) ? axial(axis_of(u)) : polar(axis_of(u))};
  }
  const int a = axis_of(u);
  const int b = axis_of(v);
  const bool same_species = is_polar(u) == is_polar(v);
  if (a == b) return {1, 0, same_species ? Basis::One : Basis::Pseudo};
  const int c = 3 - a - b;
  const std::int8_t sign = ((b - a + 3) % 3 == 1) ? 1 : -1;  // Levi-Civita
  return {0, sign, same_species ? axial(c) : polar(c)};
}

constexpr std::array<UnitProduct, 64> make_product_table() {
  std::array<UnitProduct, 64> t{};
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      t[static_cast<std::size_t>(u * 8 + v)] =
          unit_product(static_cast<Basis>(u), static_cast<Basis>(v));
  return t;
}

inline constexpr std::array<UnitProduct, 64> kProductTable = make_product_table();

// Applies a structure constant to a coefficient product.
inline Complex apply_coeff(const UnitProduct& p, Complex z) {
  if (p.im == 0) return p.re > 0 ? z : neg(z);
  return p.im > 0 ? xi_times(z) : neg_xi_times(z);
}

}  // namespace detail

/// u * v as (coefficient, unit); total on all 64 pairs.
inline UnitProduct basis_product(Basis u, Basis v) {
  return detail::kProductTable[static_cast<std::size_t>(u) * 8 +
                               static_cast<std::size_t>(v)];
}

/// Eight complex coefficients over the canonical basis. Values are
/// immutable in spirit: all operations below are pure.
class Octon {
 public:
  Octon() = default;
  explicit Octon(const std::array<Complex, 8>& coeffs) : c_(coeffs) {}

  static Octon unit(Basis u, Complex coeff = 1.0) {
    Octon o;
    o[u] = coeff;
    return o;
  }
  static Octon scalar(Complex d) { return unit(Basis::One, d); }

  Complex& operator[](Basis u) { return c_[static_cast<std::size_t>(u)]; }
  const Complex& operator[](Basis u) const { return c_[static_cast<std::size_t>(u)]; }
  Complex& operator[](std::size_t k) { return c_[k]; }
  const Complex& operator[](std::size_t k) const { return c_[k]; }

  const std::array<Complex, 8>& coeffs() const { return c_; }

  bool operator==(const Octon& o) const { return c_ == o.c_; }
  bool operator!=(const Octon& o) const { return !(*this == o); }

  Octon& operator+=(const Octon& o) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Octon& operator-=(const Octon& o) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
  }

 private:
  std::array<Complex, 8> c_{};
};

inline Octon operator+(Octon a, const Octon& b) { return a += b; }
inline Octon operator-(Octon a, const Octon& b) { return a -= b; }

inline Octon add(const Octon& a, const Octon& b) { return a + b; }

inline Octon scale(Complex lambda, const Octon& a) {
  Octon r;
  for (std::size_t k = 0; k < 8; ++k) r[k] = lambda * a[k];
  return r;
}
inline Octon scale(double lambda, const Octon& a) {
  Octon r;
  for (std::size_t k = 0; k < 8; ++k)
    r[k] = Complex{lambda * a[k].real(), lambda * a[k].imag()};
  return r;
}

/// Full product, the bilinear extension of basis_product. Accumulation
/// order is fixed (left index major), so results are deterministic.
Octon multiply(const Octon& a, const Octon& b);
inline Octon operator*(const Octon& a, const Octon& b) { return multiply(a, b); }

/// Left product by a single basis unit; a permutation with sign and xi
/// twiddles. Agrees with multiply(Octon::unit(u), a) exactly.
Octon unit_multiply(Basis u, const Octon& a);
/// Right product by a single basis unit.
Octon multiply_unit(const Octon& a, Basis u);

/// Negates the vector and pseudoscalar coefficients, fixing scalar and
/// pseudovector ones. A multiplicative automorphism of the algebra.
Octon spatial_inversion(const Octon& a);

/// Conjugates all eight coefficients. Not an algebra homomorphism: the
/// xi-carrying cross products change sign under it.
Octon complex_conjugate(const Octon& a);

struct GradedParts {
  Complex scalar{};
  std::array<Complex, 3> vector{};
  Complex pseudoscalar{};
  std::array<Complex, 3> pseudovector{};

  Octon reassemble() const;
};

GradedParts grade_split(const Octon& a);
Octon grade_select(const Octon& a, Grade g);

/// True if the scalar and pseudoscalar coefficients are exactly zero.
bool is_pure_vector(const Octon& a);

/// Symmetric part of the product of two pure vector/pseudovector octons:
/// the scalar and pseudoscalar grades of v1*v2. Throws std::invalid_argument
/// on inputs with nonzero scalar or pseudoscalar coefficients.
Octon scalar_product(const Octon& v1, const Octon& v2);

/// Antisymmetric part of the same product: vector and pseudovector grades.
/// Same purity requirement. scalar_product + vector_product == multiply
/// on pure inputs.
Octon vector_product(const Octon& v1, const Octon& v2);

/// Max coefficient modulus.
double linf_norm(const Octon& a);

std::string to_string(const Octon& a);

}  // namespace octoem

#endif  // OCTOEM_OCTON_HPP

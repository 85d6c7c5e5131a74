#ifndef OCTOEM_GRID_HPP
#define OCTOEM_GRID_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "octoem/octon.hpp"

namespace octoem {

/// Uniform 3D periodic lattice. Storage convention everywhere is row
/// major with z fastest: index = (i*ny + j)*nz + k.
struct Grid3 {
  std::array<int, 3> n{};
  std::array<double, 3> h{};
  std::array<double, 3> origin{0.0, 0.0, 0.0};

  Grid3() = default;
  Grid3(std::array<int, 3> n_, std::array<double, 3> h_,
        std::array<double, 3> origin_ = {0.0, 0.0, 0.0})
      : n(n_), h(h_), origin(origin_) {
    for (int a = 0; a < 3; ++a) {
      if (n[static_cast<std::size_t>(a)] < 4)
        throw std::invalid_argument("Grid3: each extent must be >= 4");
      if (!(h[static_cast<std::size_t>(a)] > 0.0))
        throw std::invalid_argument("Grid3: spacings must be positive");
    }
  }

  /// Cube with extent nn and box length len per axis.
  static Grid3 cube(int nn, double len = 1.0) {
    return Grid3({nn, nn, nn}, {len / nn, len / nn, len / nn});
  }

  bool operator==(const Grid3&) const = default;

  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]) *
           static_cast<std::size_t>(n[2]);
  }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n[1]) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(n[2]) +
           static_cast<std::size_t>(k);
  }
  std::array<double, 3> position(int i, int j, int k) const {
    return {origin[0] + i * h[0], origin[1] + j * h[1], origin[2] + k * h[2]};
  }
  std::array<double, 3> length() const {
    return {n[0] * h[0], n[1] * h[1], n[2] * h[2]};
  }
  double cell_volume() const { return h[0] * h[1] * h[2]; }
  double min_spacing() const {
    return std::min(h[0], std::min(h[1], h[2]));
  }
};

inline void require_same_grid(const Grid3& a, const Grid3& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

template <class T>
struct Field {
  Grid3 grid;
  std::vector<T> data;

  Field() = default;
  explicit Field(const Grid3& g) : grid(g), data(g.size()) {}
  Field(const Grid3& g, const T& fill) : grid(g), data(g.size(), fill) {}

  T& at(int i, int j, int k) { return data[grid.index(i, j, k)]; }
  const T& at(int i, int j, int k) const { return data[grid.index(i, j, k)]; }
  T& operator[](std::size_t s) { return data[s]; }
  const T& operator[](std::size_t s) const { return data[s]; }
  std::size_t size() const { return data.size(); }
};

using OctonField = Field<Octon>;
using ScalarField = Field<double>;
using Vec3 = std::array<double, 3>;
using Vec3Field = Field<Vec3>;

/// Field value plus its (analytic or solver-supplied) time derivative.
struct TimeSlice {
  OctonField value;
  OctonField d_dt;

  TimeSlice() = default;
  TimeSlice(OctonField v, OctonField dt) : value(std::move(v)), d_dt(std::move(dt)) {
    require_same_grid(value.grid, d_dt.grid, "TimeSlice");
  }
};

/// Samples f(x, y, z) at every site; f must be pure (sites are filled
/// in parallel).
template <class T, class F>
Field<T> sample(const Grid3& g, F&& f) {
  Field<T> out(g);
#pragma omp parallel for
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        const auto p = g.position(i, j, k);
        out.at(i, j, k) = f(p[0], p[1], p[2]);
      }
  return out;
}

}  // namespace octoem

#endif  // OCTOEM_GRID_HPP

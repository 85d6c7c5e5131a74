#include "octoem/real_fields.hpp"

#include <cmath>

namespace octoem {

namespace {

// d/d(axis) of one component array, centered differences, periodic.
template <class Get>
void axis_diff(const Grid3& g, int axis, Get&& get, ScalarField& out) {
  const int nx = g.n[0], ny = g.n[1], nz = g.n[2];
  const int ext = g.n[static_cast<std::size_t>(axis)];
  const double w = 1.0 / (2.0 * g.h[static_cast<std::size_t>(axis)]);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k) {
        int up[3] = {i, j, k};
        int dn[3] = {i, j, k};
        up[axis] = up[axis] + 1 == ext ? 0 : up[axis] + 1;
        dn[axis] = dn[axis] == 0 ? ext - 1 : dn[axis] - 1;
        out.at(i, j, k) =
            (get(up[0], up[1], up[2]) - get(dn[0], dn[1], dn[2])) * w;
      }
}

}  // namespace

ScalarField divergence(const Vec3Field& v) {
  const Grid3& g = v.grid;
  ScalarField out(g);
  ScalarField tmp(g);
  for (int axis = 0; axis < 3; ++axis) {
    axis_diff(g, axis,
              [&](int i, int j, int k) {
                return v.at(i, j, k)[static_cast<std::size_t>(axis)];
              },
              tmp);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] += tmp[s];
  }
  return out;
}

Vec3Field curl(const Vec3Field& v) {
  const Grid3& g = v.grid;
  Vec3Field out(g, Vec3{0.0, 0.0, 0.0});
  ScalarField tmp(g);
  // (curl v)_a = d(v_c)/d(b) - d(v_b)/d(c) with (a,b,c) cyclic.
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    axis_diff(g, b,
              [&](int i, int j, int k) {
                return v.at(i, j, k)[static_cast<std::size_t>(c)];
              },
              tmp);
    for (std::size_t s = 0; s < out.size(); ++s)
      out[s][static_cast<std::size_t>(a)] = tmp[s];
    axis_diff(g, c,
              [&](int i, int j, int k) {
                return v.at(i, j, k)[static_cast<std::size_t>(b)];
              },
              tmp);
    for (std::size_t s = 0; s < out.size(); ++s)
      out[s][static_cast<std::size_t>(a)] -= tmp[s];
  }
  return out;
}

Vec3Field gradient(const ScalarField& f) {
  const Grid3& g = f.grid;
  Vec3Field out(g, Vec3{0.0, 0.0, 0.0});
  ScalarField tmp(g);
  for (int axis = 0; axis < 3; ++axis) {
    axis_diff(g, axis, [&](int i, int j, int k) { return f.at(i, j, k); }, tmp);
    for (std::size_t s = 0; s < out.size(); ++s)
      out[s][static_cast<std::size_t>(axis)] = tmp[s];
  }
  return out;
}

ScalarField scalar_laplacian(const ScalarField& f) {
  const Grid3& g = f.grid;
  ScalarField out(g);
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        const int coord[3] = {i, j, k};
        double acc = 0.0;
        for (int axis = 0; axis < 3; ++axis) {
          const int ext = g.n[static_cast<std::size_t>(axis)];
          int up[3] = {i, j, k};
          int dn[3] = {i, j, k};
          up[axis] = coord[axis] + 1 == ext ? 0 : coord[axis] + 1;
          dn[axis] = coord[axis] == 0 ? ext - 1 : coord[axis] - 1;
          const double h = g.h[static_cast<std::size_t>(axis)];
          acc += (f.at(up[0], up[1], up[2]) - 2.0 * f.at(i, j, k) +
                  f.at(dn[0], dn[1], dn[2])) /
                 (h * h);
        }
        out.at(i, j, k) = acc;
      }
  return out;
}

Vec3Field vector_laplacian(const Vec3Field& v) {
  const Grid3& g = v.grid;
  Vec3Field out(g, Vec3{0.0, 0.0, 0.0});
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        const int coord[3] = {i, j, k};
        Vec3 acc{0.0, 0.0, 0.0};
        for (int axis = 0; axis < 3; ++axis) {
          const int ext = g.n[static_cast<std::size_t>(axis)];
          int up[3] = {i, j, k};
          int dn[3] = {i, j, k};
          up[axis] = coord[axis] + 1 == ext ? 0 : coord[axis] + 1;
          dn[axis] = coord[axis] == 0 ? ext - 1 : coord[axis] - 1;
          const double h = g.h[static_cast<std::size_t>(axis)];
          const Vec3& u = v.at(up[0], up[1], up[2]);
          const Vec3& c = v.at(i, j, k);
          const Vec3& d = v.at(dn[0], dn[1], dn[2]);
          for (std::size_t m = 0; m < 3; ++m)
            acc[m] += (u[m] - 2.0 * c[m] + d[m]) / (h * h);
        }
        out.at(i, j, k) = acc;
      }
  return out;
}

ScalarField dot(const Vec3Field& a, const Vec3Field& b) {
  require_same_grid(a.grid, b.grid, "dot");
  ScalarField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s)
    r[s] = a[s][0] * b[s][0] + a[s][1] * b[s][1] + a[s][2] * b[s][2];
  return r;
}

Vec3Field cross(const Vec3Field& a, const Vec3Field& b) {
  require_same_grid(a.grid, b.grid, "cross");
  Vec3Field r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) {
    r[s] = {a[s][1] * b[s][2] - a[s][2] * b[s][1],
            a[s][2] * b[s][0] - a[s][0] * b[s][2],
            a[s][0] * b[s][1] - a[s][1] * b[s][0]};
  }
  return r;
}

Vec3Field vmul(const ScalarField& s, const Vec3Field& v) {
  require_same_grid(s.grid, v.grid, "vmul");
  Vec3Field r(v.grid);
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = {s[k] * v[k][0], s[k] * v[k][1], s[k] * v[k][2]};
  return r;
}

ScalarField sadd(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "sadd");
  ScalarField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = a[s] + b[s];
  return r;
}

ScalarField ssub(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "ssub");
  ScalarField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = a[s] - b[s];
  return r;
}

ScalarField sscale(double f, const ScalarField& a) {
  ScalarField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = f * a[s];
  return r;
}

Vec3Field vadd(const Vec3Field& a, const Vec3Field& b) {
  require_same_grid(a.grid, b.grid, "vadd");
  Vec3Field r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s)
    r[s] = {a[s][0] + b[s][0], a[s][1] + b[s][1], a[s][2] + b[s][2]};
  return r;
}

Vec3Field vsub(const Vec3Field& a, const Vec3Field& b) {
  require_same_grid(a.grid, b.grid, "vsub");
  Vec3Field r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s)
    r[s] = {a[s][0] - b[s][0], a[s][1] - b[s][1], a[s][2] - b[s][2]};
  return r;
}

Vec3Field vscale(double f, const Vec3Field& a) {
  Vec3Field r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s)
    r[s] = {f * a[s][0], f * a[s][1], f * a[s][2]};
  return r;
}

void vlincomb(Vec3Field& out, std::initializer_list<double> coeffs,
              std::initializer_list<const Vec3Field*> terms) {
  auto c = coeffs.begin();
  auto t = terms.begin();
  const std::size_t nterm = coeffs.size();
  for (std::size_t s = 0; s < out.size(); ++s) {
    Vec3 acc{0.0, 0.0, 0.0};
    for (std::size_t q = 0; q < nterm; ++q) {
      const Vec3& v = (*(t[q]))[s];
      for (std::size_t m = 0; m < 3; ++m) acc[m] += c[q] * v[m];
    }
    out[s] = acc;
  }
}

Norms scalar_norms(const ScalarField& f) {
  Norms n;
  double sumsq = 0.0;
  for (double v : f.data) {
    sumsq += v * v;
    n.linf = std::max(n.linf, std::abs(v));
  }
  n.l2 = std::sqrt(sumsq * f.grid.cell_volume());
  return n;
}

Norms vec3_norms(const Vec3Field& f) {
  Norms n;
  double sumsq = 0.0;
  for (const Vec3& v : f.data) {
    for (double x : v) {
      sumsq += x * x;
      n.linf = std::max(n.linf, std::abs(x));
    }
  }
  n.l2 = std::sqrt(sumsq * f.grid.cell_volume());
  return n;
}

Norms scalar_norms_interior(const ScalarField& f, int band) {
  const Grid3& g = f.grid;
  Norms n;
  double sumsq = 0.0;
  for (int i = band; i < g.n[0] - band; ++i)
    for (int j = band; j < g.n[1] - band; ++j)
      for (int k = band; k < g.n[2] - band; ++k) {
        const double v = f.at(i, j, k);
        sumsq += v * v;
        n.linf = std::max(n.linf, std::abs(v));
      }
  n.l2 = std::sqrt(sumsq * g.cell_volume());
  return n;
}

Norms vec3_norms_interior(const Vec3Field& f, int band) {
  const Grid3& g = f.grid;
  Norms n;
  double sumsq = 0.0;
  for (int i = band; i < g.n[0] - band; ++i)
    for (int j = band; j < g.n[1] - band; ++j)
      for (int k = band; k < g.n[2] - band; ++k) {
        for (double x : f.at(i, j, k)) {
          sumsq += x * x;
          n.linf = std::max(n.linf, std::abs(x));
        }
      }
  n.l2 = std::sqrt(sumsq * g.cell_volume());
  return n;
}

double integrate(const ScalarField& f) {
  double acc = 0.0;
  for (double v : f.data) acc += v;
  return acc * f.grid.cell_volume();
}

Vec3 integrate(const Vec3Field& f) {
  Vec3 acc{0.0, 0.0, 0.0};
  for (const Vec3& v : f.data) {
    acc[0] += v[0];
    acc[1] += v[1];
    acc[2] += v[2];
  }
  const double dv = f.grid.cell_volume();
  return {acc[0] * dv, acc[1] * dv, acc[2] * dv};
}

bool all_finite(const Vec3Field& f) {
  for (const Vec3& v : f.data)
    for (double x : v)
      if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace octoem

#include "octoem/field_ops.hpp"

#include <cmath>
#include <cstddef>

namespace octoem {

namespace {

void ensure_like(OctonField& f, const Grid3& g) {
  if (!(f.grid == g)) {
    f.grid = g;
    f.data.assign(g.size(), Octon{});
  }
}

}  // namespace

void partial_into(const OctonField& f, int axis, OctonField& out) {
  const Grid3& g = f.grid;
  ensure_like(out, g);
  const int nx = g.n[0], ny = g.n[1], nz = g.n[2];
  const std::ptrdiff_t strides[3] = {static_cast<std::ptrdiff_t>(ny) * nz, nz, 1};
  const std::ptrdiff_t st = strides[axis];
  const int ext = g.n[static_cast<std::size_t>(axis)];
  const double w = 1.0 / (2.0 * g.h[static_cast<std::size_t>(axis)]);
  const Octon* src = f.data.data();
  Octon* dst = out.data.data();

#pragma omp parallel for
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const std::size_t base = g.index(i, j, 0);
      for (int k = 0; k < nz; ++k) {
        const std::size_t s0 = base + static_cast<std::size_t>(k);
        const int c = axis == 0 ? i : (axis == 1 ? j : k);
        const std::ptrdiff_t dp = ((c + 1 == ext ? 0 : c + 1) - c) * st;
        const std::ptrdiff_t dm = ((c == 0 ? ext - 1 : c - 1) - c) * st;
        const Octon& up = src[static_cast<std::size_t>(
            static_cast<std::ptrdiff_t>(s0) + dp)];
        const Octon& dn = src[static_cast<std::size_t>(
            static_cast<std::ptrdiff_t>(s0) + dm)];
        Octon& o = dst[s0];
        for (std::size_t m = 0; m < 8; ++m) {
          o[m] = Complex{(up[m].real() - dn[m].real()) * w,
                         (up[m].imag() - dn[m].imag()) * w};
        }
      }
    }
  }
}

OctonField partial(const OctonField& f, int axis) {
  OctonField out;
  partial_into(f, axis, out);
  return out;
}

void nabla_apply_into(const OctonField& f, OctonField& out, OctonField& scratch) {
  const Grid3& g = f.grid;
  ensure_like(out, g);
  for (auto& o : out.data) o = Octon{};
  for (int axis = 0; axis < 3; ++axis) {
    partial_into(f, axis, scratch);
    const Basis u = detail::polar(axis);
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(g.size());
    Octon* dst = out.data.data();
    const Octon* src = scratch.data.data();
#pragma omp parallel for
    for (std::ptrdiff_t s = 0; s < total; ++s) {
      dst[s] += unit_multiply(u, src[s]);
    }
  }
}

OctonField nabla_apply(const OctonField& f) {
  OctonField out, scratch;
  nabla_apply_into(f, out, scratch);
  return out;
}

OctonField laplacian(const OctonField& f) {
  const Grid3& g = f.grid;
  OctonField out(g);
  const int nx = g.n[0], ny = g.n[1], nz = g.n[2];
  const std::ptrdiff_t strides[3] = {static_cast<std::ptrdiff_t>(ny) * nz, nz, 1};
  const double w[3] = {1.0 / (g.h[0] * g.h[0]), 1.0 / (g.h[1] * g.h[1]),
                       1.0 / (g.h[2] * g.h[2])};
  const Octon* src = f.data.data();
  Octon* dst = out.data.data();

#pragma omp parallel for
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const std::size_t base = g.index(i, j, 0);
      for (int k = 0; k < nz; ++k) {
        const std::size_t s0 = base + static_cast<std::size_t>(k);
        const int coord[3] = {i, j, k};
        Octon& o = dst[s0];
        for (int axis = 0; axis < 3; ++axis) {
          const int ext = g.n[static_cast<std::size_t>(axis)];
          const int c = coord[axis];
          const std::ptrdiff_t st = strides[axis];
          const std::ptrdiff_t dp = ((c + 1 == ext ? 0 : c + 1) - c) * st;
          const std::ptrdiff_t dm = ((c == 0 ? ext - 1 : c - 1) - c) * st;
          const Octon& up = src[static_cast<std::size_t>(
              static_cast<std::ptrdiff_t>(s0) + dp)];
          const Octon& dn = src[static_cast<std::size_t>(
              static_cast<std::ptrdiff_t>(s0) + dm)];
          const Octon& ce = src[s0];
          const double wa = w[axis];
          for (std::size_t m = 0; m < 8; ++m) {
            o[m] += Complex{
                (up[m].real() - 2.0 * ce[m].real() + dn[m].real()) * wa,
                (up[m].imag() - 2.0 * ce[m].imag() + dn[m].imag()) * wa};
          }
        }
      }
    }
  }
  return out;
}

OctonField p_apply(const TimeSlice& slice, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("p_apply: c must be positive");
  require_same_grid(slice.value.grid, slice.d_dt.grid, "p_apply");
  OctonField out, scratch;
  nabla_apply_into(slice.value, out, scratch);
  const double inv_c = 1.0 / c;
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(out.size());
  Octon* dst = out.data.data();
  const Octon* dt = slice.d_dt.data.data();
#pragma omp parallel for
  for (std::ptrdiff_t s = 0; s < total; ++s) {
    for (std::size_t m = 0; m < 8; ++m) {
      dst[s][m] = Complex{inv_c * dt[s][m].real() + dst[s][m].real(),
                          inv_c * dt[s][m].imag() + dst[s][m].imag()};
    }
  }
  return out;
}

OctonField p_conj_apply(const TimeSlice& slice, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("p_conj_apply: c must be positive");
  require_same_grid(slice.value.grid, slice.d_dt.grid, "p_conj_apply");
  OctonField out, scratch;
  nabla_apply_into(slice.value, out, scratch);
  const double inv_c = 1.0 / c;
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(out.size());
  Octon* dst = out.data.data();
  const Octon* dt = slice.d_dt.data.data();
#pragma omp parallel for
  for (std::ptrdiff_t s = 0; s < total; ++s) {
    for (std::size_t m = 0; m < 8; ++m) {
      dst[s][m] = Complex{inv_c * dt[s][m].real() - dst[s][m].real(),
                          inv_c * dt[s][m].imag() - dst[s][m].imag()};
    }
  }
  return out;
}

Norms field_norms(const OctonField& f) {
  Norms n;
  double sumsq = 0.0;
  for (const Octon& o : f.data) {
    for (std::size_t m = 0; m < 8; ++m) {
      const double re = o[m].real(), im = o[m].imag();
      const double sq = re * re + im * im;
      sumsq += sq;
      n.linf = std::max(n.linf, std::sqrt(sq));
    }
  }
  n.l2 = std::sqrt(sumsq * f.grid.cell_volume());
  return n;
}

Norms field_norms_interior(const OctonField& f, int band) {
  const Grid3& g = f.grid;
  Norms n;
  double sumsq = 0.0;
  for (int i = band; i < g.n[0] - band; ++i)
    for (int j = band; j < g.n[1] - band; ++j)
      for (int k = band; k < g.n[2] - band; ++k) {
        const Octon& o = f.at(i, j, k);
        for (std::size_t m = 0; m < 8; ++m) {
          const double re = o[m].real(), im = o[m].imag();
          const double sq = re * re + im * im;
          sumsq += sq;
          n.linf = std::max(n.linf, std::sqrt(sq));
        }
      }
  n.l2 = std::sqrt(sumsq * g.cell_volume());
  return n;
}

OctonField field_add(const OctonField& a, const OctonField& b) {
  require_same_grid(a.grid, b.grid, "field_add");
  OctonField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = a[s] + b[s];
  return r;
}

OctonField field_sub(const OctonField& a, const OctonField& b) {
  require_same_grid(a.grid, b.grid, "field_sub");
  OctonField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = a[s] - b[s];
  return r;
}

OctonField field_scale(Complex sc, const OctonField& a) {
  OctonField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = scale(sc, a[s]);
  return r;
}

OctonField field_scale(double sc, const OctonField& a) {
  OctonField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = scale(sc, a[s]);
  return r;
}

OctonField field_conjugate(const OctonField& a) {
  OctonField r(a.grid);
  for (std::size_t s = 0; s < r.size(); ++s) r[s] = complex_conjugate(a[s]);
  return r;
}

OctonField field_multiply(const OctonField& a, const OctonField& b) {
  require_same_grid(a.grid, b.grid, "field_multiply");
  OctonField r(a.grid);
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(r.size());
#pragma omp parallel for
  for (std::ptrdiff_t s = 0; s < total; ++s)
    r[static_cast<std::size_t>(s)] = multiply(a[static_cast<std::size_t>(s)],
                                              b[static_cast<std::size_t>(s)]);
  return r;
}

OctonField field_shift(const OctonField& a, int axis, int offset) {
  const Grid3& g = a.grid;
  OctonField r(g);
  const int ext = g.n[static_cast<std::size_t>(axis)];
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        int c[3] = {i, j, k};
        c[axis] = ((c[axis] + offset) % ext + ext) % ext;
        r.at(i, j, k) = a.at(c[0], c[1], c[2]);
      }
  return r;
}

void octonic_vector_analysis_into(const Vec3Field& v, bool axial,
                                  ScalarField& div, Vec3Field& rot,
                                  NablaWorkspace& ws) {
  const Grid3& g = v.grid;
  ensure_like(ws.embedded, g);
  if (!(div.grid == g)) {
    div.grid = g;
    div.data.assign(g.size(), 0.0);
  }
  if (!(rot.grid == g)) {
    rot.grid = g;
    rot.data.assign(g.size(), Vec3{0.0, 0.0, 0.0});
  }

  const std::size_t slot = axial ? 5 : 1;
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for
  for (std::ptrdiff_t s = 0; s < total; ++s) {
    Octon& o = ws.embedded[static_cast<std::size_t>(s)];
    o = Octon{};
    const Vec3& val = v[static_cast<std::size_t>(s)];
    o[slot] = Complex{val[0], 0.0};
    o[slot + 1] = Complex{val[1], 0.0};
    o[slot + 2] = Complex{val[2], 0.0};
  }

  nabla_apply_into(ws.embedded, ws.image, ws.scratch);

  const std::size_t div_slot = axial ? 4 : 0;  // pseudoscalar vs scalar grade
  const std::size_t rot_slot = axial ? 1 : 5;  // xi * rot lands opposite
#pragma omp parallel for
  for (std::ptrdiff_t s = 0; s < total; ++s) {
    const Octon& o = ws.image[static_cast<std::size_t>(s)];
    div[static_cast<std::size_t>(s)] = o[div_slot].real();
    rot[static_cast<std::size_t>(s)] = {o[rot_slot].imag(),
                                        o[rot_slot + 1].imag(),
                                        o[rot_slot + 2].imag()};
  }
}

VectorAnalysis octonic_vector_analysis(const Vec3Field& v, bool axial,
                                       NablaWorkspace* ws) {
  NablaWorkspace local;
  NablaWorkspace& w = ws ? *ws : local;
  VectorAnalysis res;
  octonic_vector_analysis_into(v, axial, res.div, res.rot, w);
  return res;
}

}  // namespace octoem

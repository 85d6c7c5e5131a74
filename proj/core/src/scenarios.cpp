#include "octoem/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace octoem {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double kdotx(const Vec3& k, const Vec3& x) {
  return k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
}
}  // namespace

double AnalyticScalar::value(const Vec3& x, double t) const {
  double acc = 0.0;
  for (const WaveTerm& w : terms)
    acc += w.amp * std::cos(kdotx(w.k, x) + w.phase) *
           std::cos(w.omega * t + w.tphase);
  return acc;
}

double AnalyticScalar::dt(const Vec3& x, double t) const {
  double acc = 0.0;
  for (const WaveTerm& w : terms)
    acc += -w.amp * w.omega * std::cos(kdotx(w.k, x) + w.phase) *
           std::sin(w.omega * t + w.tphase);
  return acc;
}

double AnalyticScalar::dtt(const Vec3& x, double t) const {
  double acc = 0.0;
  for (const WaveTerm& w : terms)
    acc += -w.amp * w.omega * w.omega * std::cos(kdotx(w.k, x) + w.phase) *
           std::cos(w.omega * t + w.tphase);
  return acc;
}

Vec3 AnalyticScalar::grad(const Vec3& x, double t) const {
  Vec3 acc{0.0, 0.0, 0.0};
  for (const WaveTerm& w : terms) {
    const double s = -w.amp * std::sin(kdotx(w.k, x) + w.phase) *
                     std::cos(w.omega * t + w.tphase);
    for (std::size_t a = 0; a < 3; ++a) acc[a] += s * w.k[a];
  }
  return acc;
}

double AnalyticScalar::laplacian(const Vec3& x, double t) const {
  double acc = 0.0;
  for (const WaveTerm& w : terms) {
    const double k2 = w.k[0] * w.k[0] + w.k[1] * w.k[1] + w.k[2] * w.k[2];
    acc += -k2 * w.amp * std::cos(kdotx(w.k, x) + w.phase) *
           std::cos(w.omega * t + w.tphase);
  }
  return acc;
}

Vec3 AnalyticVec3::value(const Vec3& x, double t) const {
  return {comp[0].value(x, t), comp[1].value(x, t), comp[2].value(x, t)};
}
Vec3 AnalyticVec3::dt(const Vec3& x, double t) const {
  return {comp[0].dt(x, t), comp[1].dt(x, t), comp[2].dt(x, t)};
}
Vec3 AnalyticVec3::dtt(const Vec3& x, double t) const {
  return {comp[0].dtt(x, t), comp[1].dtt(x, t), comp[2].dtt(x, t)};
}
double AnalyticVec3::divergence(const Vec3& x, double t) const {
  return comp[0].grad(x, t)[0] + comp[1].grad(x, t)[1] + comp[2].grad(x, t)[2];
}

namespace {
template <class Eval>
OctonField sample_octon(const Grid3& g, Eval&& eval) {
  OctonField out(g);
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        const Vec3 x = g.position(i, j, k);
        Octon& o = out.at(i, j, k);
        for (std::size_t m = 0; m < 8; ++m) o[m] = Complex{eval(m, x), 0.0};
      }
  return out;
}
}  // namespace

OctonField AnalyticOcton::sample_value(const Grid3& g, double t) const {
  return sample_octon(g, [&](std::size_t m, const Vec3& x) {
    return comp[m].value(x, t);
  });
}
OctonField AnalyticOcton::sample_dt(const Grid3& g, double t) const {
  return sample_octon(g, [&](std::size_t m, const Vec3& x) {
    return comp[m].dt(x, t);
  });
}
OctonField AnalyticOcton::sample_dtt(const Grid3& g, double t) const {
  return sample_octon(g, [&](std::size_t m, const Vec3& x) {
    return comp[m].dtt(x, t);
  });
}
OctonField AnalyticOcton::sample_laplacian(const Grid3& g, double t) const {
  return sample_octon(g, [&](std::size_t m, const Vec3& x) {
    return comp[m].laplacian(x, t);
  });
}

ScalarField sample_value(const Grid3& g, const AnalyticScalar& f, double t) {
  return sample<double>(g, [&](double x, double y, double z) {
    return f.value({x, y, z}, t);
  });
}
ScalarField sample_dt(const Grid3& g, const AnalyticScalar& f, double t) {
  return sample<double>(g, [&](double x, double y, double z) {
    return f.dt({x, y, z}, t);
  });
}
Vec3Field sample_value(const Grid3& g, const AnalyticVec3& f, double t) {
  return sample<Vec3>(g, [&](double x, double y, double z) {
    return f.value({x, y, z}, t);
  });
}
Vec3Field sample_dt(const Grid3& g, const AnalyticVec3& f, double t) {
  return sample<Vec3>(g, [&](double x, double y, double z) {
    return f.dt({x, y, z}, t);
  });
}
Vec3Field sample_dtt(const Grid3& g, const AnalyticVec3& f, double t) {
  return sample<Vec3>(g, [&](double x, double y, double z) {
    return f.dtt({x, y, z}, t);
  });
}

AnalyticScalar random_smooth_scalar(std::mt19937_64& rng, const Vec3& box,
                                    int nterms, int max_mode,
                                    double omega_scale) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> ph(0.0, kTwoPi);
  std::uniform_int_distribution<int> mode(-max_mode, max_mode);
  AnalyticScalar f;
  for (int t = 0; t < nterms; ++t) {
    WaveTerm w;
    w.amp = amp(rng);
    int m[3] = {mode(rng), mode(rng), mode(rng)};
    if (m[0] == 0 && m[1] == 0 && m[2] == 0) m[2] = 1;
    for (std::size_t a = 0; a < 3; ++a) w.k[a] = kTwoPi * m[a] / box[a];
    w.phase = ph(rng);
    w.omega = omega_scale * (0.5 + amp(rng));
    w.tphase = ph(rng);
    f.terms.push_back(w);
  }
  return f;
}

AnalyticVec3 random_smooth_vec3(std::mt19937_64& rng, const Vec3& box,
                                int nterms, int max_mode, double omega_scale) {
  AnalyticVec3 v;
  for (int a = 0; a < 3; ++a)
    v.comp[a] = random_smooth_scalar(rng, box, nterms, max_mode, omega_scale);
  return v;
}

Octon random_octon(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Octon o;
  for (std::size_t k = 0; k < 8; ++k) o[k] = Complex{u(rng), u(rng)};
  return o;
}

Octon random_vector_octon(std::mt19937_64& rng, bool polar, bool axial) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Octon o;
  if (polar)
    for (std::size_t k = 1; k <= 3; ++k) o[k] = Complex{u(rng), u(rng)};
  if (axial)
    for (std::size_t k = 5; k <= 7; ++k) o[k] = Complex{u(rng), u(rng)};
  return o;
}

// --- plane waves ---------------------------------------------------------

namespace {
Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
}  // namespace

PlaneWaveEM::PlaneWaveEM(std::vector<PlaneWaveComponent> components,
                         const Vec3& box, double c, double epsilon, double mu)
    : epsilon_(epsilon), mu_(mu) {
  if (!(epsilon > 0.0) || !(mu > 0.0))
    throw std::invalid_argument("plane wave: epsilon and mu must be positive");
  const double n_index = std::sqrt(epsilon * mu);
  for (const PlaneWaveComponent& comp : components) {
    if (comp.mode == std::array<int, 3>{0, 0, 0})
      throw std::invalid_argument("plane wave: zero wavevector");
    Prepared p;
    for (std::size_t a = 0; a < 3; ++a)
      p.k[a] = kTwoPi * comp.mode[a] / box[a];
    const double kmag = std::sqrt(dot3(p.k, p.k));
    const Vec3 khat = {p.k[0] / kmag, p.k[1] / kmag, p.k[2] / kmag};
    // Project the requested polarization onto the transverse plane.
    Vec3 e = comp.polarization;
    const double along = dot3(e, khat);
    for (std::size_t a = 0; a < 3; ++a) e[a] -= along * khat[a];
    const double emag = std::sqrt(dot3(e, e));
    if (!(emag > 1e-12))
      throw std::invalid_argument(
          "plane wave: polarization parallel to wavevector");
    for (std::size_t a = 0; a < 3; ++a)
      e[a] = comp.amplitude * e[a] / emag;
    p.e_dir = e;
    const Vec3 he = cross3(khat, e);
    // H = (n/mu) k_hat x E; B = mu H; D = eps E.
    for (std::size_t a = 0; a < 3; ++a) p.h_dir[a] = (n_index / mu) * he[a];
    p.omega = kmag * c / n_index;
    p.phase = comp.phase;
    waves_.push_back(p);
  }
}

Vec3 PlaneWaveEM::eval(FieldKind kind, int deriv, const Vec3& x, double t) const {
  Vec3 acc{0.0, 0.0, 0.0};
  for (const Prepared& w : waves_) {
    const double theta = kdotx(w.k, x) - w.omega * t + w.phase;
    double factor = 0.0;
    switch (deriv) {
      case 0: factor = std::cos(theta); break;
      case 1: factor = w.omega * std::sin(theta); break;     // d/dt cos = +omega sin
      default: factor = -w.omega * w.omega * std::cos(theta); break;
    }
    Vec3 dir = (kind == kE || kind == kD) ? w.e_dir : w.h_dir;
    double scale = 1.0;
    if (kind == kD) scale = epsilon_;
    if (kind == kB) scale = mu_;
    for (std::size_t a = 0; a < 3; ++a) acc[a] += scale * factor * dir[a];
  }
  return acc;
}

double PlaneWaveEM::max_amplitude() const {
  double m = 0.0;
  for (const Prepared& w : waves_) {
    m = std::max(m, std::sqrt(dot3(w.e_dir, w.e_dir)));
    m = std::max(m, std::sqrt(dot3(w.h_dir, w.h_dir)));
  }
  return m;
}

std::array<int, 3> mode_from_wavevector(const Vec3& k, const Vec3& box) {
  std::array<int, 3> mode{};
  for (std::size_t a = 0; a < 3; ++a) {
    const double m = k[a] * box[a] / kTwoPi;
    const double r = std::round(m);
    if (std::abs(m - r) > 1e-9)
      throw std::invalid_argument(
          "wavevector incommensurate with the periodic box");
    mode[a] = static_cast<int>(r);
  }
  return mode;
}

RandomEMData random_em_data(const Grid3& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Vec3 box = g.length();
  RandomEMData d;
  d.E = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  d.H = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  d.dtE = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  d.dtH = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  d.j = sample_value(g, random_smooth_vec3(rng, box), 0.0);
  d.rho = sample_value(g, random_smooth_scalar(rng, box), 0.0);
  return d;
}

}  // namespace octoem

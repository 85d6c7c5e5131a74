#ifndef OCTOEM_SCENARIOS_HPP
#define OCTOEM_SCENARIOS_HPP

#include <random>
#include <vector>

#include "octoem/grid.hpp"

namespace octoem {

// --- analytic trigonometric fields --------------------------------------
//
// Everything the convergence studies probe is built from sums of
// cos(k.x + phase) * cos(omega t + tphase) modes, which have exact
// derivatives of every order. Wavevectors are integer multiples of
// 2 pi / L so periodic sampling is seamless.

struct WaveTerm {
  double amp = 0.0;
  Vec3 k{0.0, 0.0, 0.0};
  double phase = 0.0;
  double omega = 0.0;
  double tphase = 0.0;
};

class AnalyticScalar {
 public:
  std::vector<WaveTerm> terms;

  double value(const Vec3& x, double t) const;
  double dt(const Vec3& x, double t) const;
  double dtt(const Vec3& x, double t) const;
  Vec3 grad(const Vec3& x, double t) const;
  double laplacian(const Vec3& x, double t) const;
};

struct AnalyticVec3 {
  AnalyticScalar comp[3];

  Vec3 value(const Vec3& x, double t) const;
  Vec3 dt(const Vec3& x, double t) const;
  Vec3 dtt(const Vec3& x, double t) const;
  double divergence(const Vec3& x, double t) const;
};

/// Octon-valued analytic probe: one trig series per coefficient channel
/// (real parts only; complex probes are built by pairing two of these).
struct AnalyticOcton {
  AnalyticScalar comp[8];

  OctonField sample_value(const Grid3& g, double t) const;
  OctonField sample_dt(const Grid3& g, double t) const;
  OctonField sample_dtt(const Grid3& g, double t) const;
  OctonField sample_laplacian(const Grid3& g, double t) const;
};

ScalarField sample_value(const Grid3& g, const AnalyticScalar& f, double t);
ScalarField sample_dt(const Grid3& g, const AnalyticScalar& f, double t);
Vec3Field sample_value(const Grid3& g, const AnalyticVec3& f, double t);
Vec3Field sample_dt(const Grid3& g, const AnalyticVec3& f, double t);
Vec3Field sample_dtt(const Grid3& g, const AnalyticVec3& f, double t);

/// Seeded random smooth scalar: `nterms` modes with integer wavevector
/// components of magnitude <= max_mode over a periodic box.
AnalyticScalar random_smooth_scalar(std::mt19937_64& rng, const Vec3& box,
                                    int nterms = 4, int max_mode = 2,
                                    double omega_scale = 1.0);
AnalyticVec3 random_smooth_vec3(std::mt19937_64& rng, const Vec3& box,
                                int nterms = 4, int max_mode = 2,
                                double omega_scale = 1.0);

/// Uniform coefficients in [-1, 1] on both channels.
Octon random_octon(std::mt19937_64& rng);
/// Random pure vector/pseudovector octon (zero scalar and pseudoscalar).
Octon random_vector_octon(std::mt19937_64& rng, bool polar, bool axial);

// --- plane electromagnetic waves ----------------------------------------

struct PlaneWaveComponent {
  double amplitude = 1.0;
  std::array<int, 3> mode{0, 0, 1};       ///< wavevector in units of 2 pi / L
  Vec3 polarization{1.0, 0.0, 0.0};       ///< direction of E; projected onto k-perp
  double phase = 0.0;
};

/// Exact monochromatic solution(s) of the Maxwell system in a
/// homogeneous isotropic medium, phase speed c / sqrt(eps mu).
/// In vacuum (eps = mu = 1) E and H coincide with D and B.
class PlaneWaveEM {
 public:
  PlaneWaveEM(std::vector<PlaneWaveComponent> components, const Vec3& box,
              double c, double epsilon = 1.0, double mu = 1.0);

  Vec3 E(const Vec3& x, double t) const { return eval(kE, 0, x, t); }
  Vec3 H(const Vec3& x, double t) const { return eval(kH, 0, x, t); }
  Vec3 D(const Vec3& x, double t) const { return eval(kD, 0, x, t); }
  Vec3 B(const Vec3& x, double t) const { return eval(kB, 0, x, t); }
  Vec3 dtE(const Vec3& x, double t) const { return eval(kE, 1, x, t); }
  Vec3 dtH(const Vec3& x, double t) const { return eval(kH, 1, x, t); }
  Vec3 dtD(const Vec3& x, double t) const { return eval(kD, 1, x, t); }
  Vec3 dtB(const Vec3& x, double t) const { return eval(kB, 1, x, t); }
  Vec3 dttE(const Vec3& x, double t) const { return eval(kE, 2, x, t); }
  Vec3 dttH(const Vec3& x, double t) const { return eval(kH, 2, x, t); }

  double epsilon() const { return epsilon_; }
  double mu() const { return mu_; }
  double max_amplitude() const;

 private:
  enum FieldKind { kE, kH, kD, kB };

  struct Prepared {
    Vec3 k;           // angular wavevector
    double omega;     // k * c / n
    double phase;
    Vec3 e_dir;       // E amplitude vector (amplitude folded in)
    Vec3 h_dir;       // H amplitude vector
  };

  Vec3 eval(FieldKind kind, int deriv, const Vec3& x, double t) const;

  std::vector<Prepared> waves_;
  double epsilon_ = 1.0;
  double mu_ = 1.0;
};

/// Converts a raw wavevector to integer mode numbers for a periodic box;
/// throws std::invalid_argument when incommensurate.
std::array<int, 3> mode_from_wavevector(const Vec3& k, const Vec3& box);

// --- random smooth field sets for path-agreement checks ------------------

/// Off-shell random smooth electromagnetic data: fields, supplied time
/// derivatives and sources are all independent smooth functions. The
/// algebraic dual-path identities hold for arbitrary data.
struct RandomEMData {
  Vec3Field E, H, dtE, dtH, j;
  ScalarField rho;
};
RandomEMData random_em_data(const Grid3& g, std::uint64_t seed);

}  // namespace octoem

#endif  // OCTOEM_SCENARIOS_HPP

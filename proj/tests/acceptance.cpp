// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Thresholds are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "octoem/gibbs.hpp"
#include "octoem/identities.hpp"
#include "octoem/io.hpp"
#include "octoem/matrix_rep.hpp"
#include "octoem/matter.hpp"
#include "octoem/scenarios.hpp"
#include "octoem/solver.hpp"
#include "octoem/verify.hpp"

using namespace octoem;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title, double time_limit_s)
      : number_(number), title_(std::move(title)), limit_(time_limit_s),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      notes_ += (notes_.empty() ? "" : "; ") + what;
    }
  }

  void note(const std::string& s) {
    notes_ += (notes_.empty() ? "" : "; ") + s;
  }

  ~Criterion() {
    const double sec = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start_)
                           .count();
    if (limit_ > 0.0 && sec > limit_) {
      pass_ = false;
      notes_ += (notes_.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!pass_) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n",
                pass_ ? "PASS" : "FAIL", number_, title_.c_str(), sec,
                notes_.empty() ? "" : " -- ", notes_.c_str());
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string title_;
  double limit_;
  std::chrono::steady_clock::time_point start_;
  bool pass_ = true;
  std::string notes_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool order_ok(double order) { return order >= 1.8 && order <= 2.2; }

IdentityOptions acceptance_options() {
  IdentityOptions opt;
  opt.levels = {16, 32, 64};
  opt.seed = 2026;
  opt.epsilon = 2.0;
  opt.mu = 3.0;
  opt.min_order = 1.8;
  opt.max_order = 2.2;
  return opt;
}

void criterion_1_algebra_table() {
  Criterion c(1, "basis product table, associativity, unit structure", 1.0);
  const RepCheck rep = verify_representation();
  c.require(rep.multiplicative, "matrix representation not multiplicative");
  c.require(rep.injective, "matrix representation not injective");

  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      const Basis bu = static_cast<Basis>(u), bv = static_cast<Basis>(v);
      const UnitProduct p = basis_product(bu, bv);
      const MatrixPair lhs = pair_mul(basis_rep(bu), basis_rep(bv));
      const MatrixPair img = basis_rep(p.unit);
      const Complex coeff{static_cast<double>(p.re), static_cast<double>(p.im)};
      const MatrixPair rhs{mat_scale(coeff, img.plus),
                           mat_scale(coeff, img.minus)};
      if (!(lhs == rhs)) {
        c.require(false, std::string("pair (") + basis_name(bu) + "," +
                             basis_name(bv) + ") fails the oracle");
      }
    }

  int triples = 0;
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      for (int w = 0; w < 8; ++w) {
        const Octon a = Octon::unit(static_cast<Basis>(u));
        const Octon b = Octon::unit(static_cast<Basis>(v));
        const Octon d = Octon::unit(static_cast<Basis>(w));
        if (multiply(multiply(a, b), d) == multiply(a, multiply(b, d)))
          ++triples;
      }
  c.require(triples == 512, "associativity failures among basis triples");

  for (int k = 1; k < 8; ++k) {
    const Basis b = static_cast<Basis>(k);
    c.require(multiply(Octon::unit(b), Octon::unit(b)) ==
                  Octon::unit(Basis::One),
              std::string(basis_name(b)) + "^2 != 1");
  }
  for (int k = 0; k < 8; ++k) {
    const Basis b = static_cast<Basis>(k);
    c.require(multiply(Octon::unit(Basis::Pseudo), Octon::unit(b)) ==
                  multiply(Octon::unit(b), Octon::unit(Basis::Pseudo)),
              "E fails to commute");
  }
  const Basis vecs[6] = {Basis::PolarX, Basis::PolarY, Basis::PolarZ,
                         Basis::AxialX, Basis::AxialY, Basis::AxialZ};
  for (Basis a : vecs)
    for (Basis b : vecs) {
      if (detail::axis_of(a) == detail::axis_of(b)) continue;
      c.require(multiply(Octon::unit(a), Octon::unit(b)) ==
                    scale(-1.0, multiply(Octon::unit(b), Octon::unit(a))),
                "nonparallel units fail to anticommute");
    }
  c.note("64/64 products vs oracle, 512/512 triples");
}

void criterion_2_random_algebra() {
  Criterion c(2, "random octons: oracle agreement and associativity", 5.0);
  std::mt19937_64 rng(2026);
  double worst_oracle = 0.0, worst_assoc = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Octon a = random_octon(rng), b = random_octon(rng),
                d = random_octon(rng);
    const double s2 = std::max(1.0, linf_norm(a) * linf_norm(b));
    const Octon via = from_matrix_pair(pair_mul(to_matrix_pair(a),
                                                to_matrix_pair(b)));
    worst_oracle =
        std::max(worst_oracle, linf_norm(multiply(a, b) - via) / s2);
    const double s3 = std::max(1.0, s2 * linf_norm(d));
    worst_assoc = std::max(
        worst_assoc, linf_norm(multiply(multiply(a, b), d) -
                               multiply(a, multiply(b, d))) / s3);
  }
  c.require(worst_oracle <= 1e-12, "oracle max err " + fmt(worst_oracle));
  c.require(worst_assoc <= 1e-12, "associativity max err " + fmt(worst_assoc));
  c.note("10^4 samples, oracle " + fmt(worst_oracle) + ", assoc " +
         fmt(worst_assoc));
}

void criterion_3_gibbs() {
  Criterion c(3, "Gibbs correspondence on random vector octons", 1.0);
  std::mt19937_64 rng(2027);
  std::bernoulli_distribution coin;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const bool a1 = coin(rng), a2 = coin(rng);
    const Octon v1 = random_vector_octon(rng, !a1 || coin(rng), a1);
    const Octon v2 = random_vector_octon(rng, !a2 || coin(rng), a2);
    worst = std::max(worst, gibbs_correspondence_residual(v1, v2));
  }
  c.require(worst <= 1e-13, "max residual " + fmt(worst));
  c.note("10^3 pairs, max residual " + fmt(worst));
}

void criterion_4_operator_composition() {
  Criterion c(4, "operator composition converges to the wave operator", 30.0);
  const auto entries = operator_composition_study(acceptance_options());
  for (const auto& e : entries) {
    if (e.kind == IdentityEntry::Kind::Order) {
      c.require(order_ok(e.order), e.name + " order " + fmt(e.order));
      c.note(e.name + " order " + fmt(e.order));
    } else {
      c.require(e.pass, e.name);
    }
  }
}

void criterion_5_maxwell() {
  Criterion c(5, "Maxwell recovery: grade split vs classical residuals", 30.0);
  const auto opt = acceptance_options();

  // Path agreement on random smooth fields.
  {
    const Grid3 g = Grid3::cube(16, 1.0);
    const RandomEMData d = random_em_data(g, opt.seed);
    const MaxwellResiduals r =
        maxwell_residual({{d.E, d.H}, {d.dtE, d.dtH}}, {d.rho, d.j},
                         opt.units);
    c.require(r.path_defect <= 1e-12 * 100.0,
              "path defect " + fmt(r.path_defect));
    c.note("path defect " + fmt(r.path_defect));
  }

  // Plane-wave convergence.
  for (const auto& e : maxwell_study(opt)) {
    if (e.kind == IdentityEntry::Kind::Order) {
      c.require(order_ok(e.order), e.name + " order " + fmt(e.order));
    } else {
      c.require(e.pass, e.name);
    }
  }
}

void criterion_6_relations() {
  Criterion c(6, "all eight energy/momentum/invariant relations", 60.0);
  for (const auto& e : relations_study(acceptance_options())) {
    if (e.kind == IdentityEntry::Kind::Order) {
      c.require(order_ok(e.order), e.name + " order " + fmt(e.order));
    } else {
      c.require(e.pass,
                e.name + " value " + fmt(e.values.empty() ? 0 : e.values[0]));
    }
  }
}

void criterion_7_wave_sign() {
  Criterion c(7, "wave equation sign falsification", 60.0);
  for (const auto& e : wave_sign_study(acceptance_options())) {
    c.require(e.pass, e.name);
    if (e.kind == IdentityEntry::Kind::NonConvergent) {
      c.note("printed +Lap form: norms stay at " +
             fmt(e.values.empty() ? 0 : e.values.back()) +
             ", order " + fmt(e.order) + " (non-convergent as required)");
    } else if (e.kind == IdentityEntry::Kind::Order) {
      c.note(e.name + " order " + fmt(e.order));
    }
  }
}

void criterion_8_matter() {
  Criterion c(8, "matter formulation: pair extraction, union, reduction", 60.0);
  for (const auto& e : matter_study(acceptance_options())) {
    if (e.kind == IdentityEntry::Kind::Order) {
      c.require(order_ok(e.order), e.name + " order " + fmt(e.order));
    } else {
      c.require(e.pass,
                e.name + " value " + fmt(e.values.empty() ? 0 : e.values[0]));
    }
  }
}

void criterion_9_solver() {
  Criterion c(9, "solver: plane-wave accuracy, conservation, refinement",
              300.0);
  const UnitsConfig units{};
  const SolverLevelResult fine = plane_wave_solver_level(64, 0.25, units, 1.0);
  const SolverLevelResult coarse = plane_wave_solver_level(32, 0.25, units, 1.0);

  c.require(fine.rms_error <= 5e-3, "L2 (RMS) error " + fmt(fine.rms_error));
  c.require(fine.energy_drift <= 1e-6,
            "energy drift " + fmt(fine.energy_drift));
  const double ratio = coarse.rms_error / fine.rms_error;
  c.require(ratio >= 3.5 && ratio <= 4.5,
            "refinement ratio " + fmt(ratio));

  // The axis-aligned wave starts with an exactly zero discrete div H,
  // so the 10x growth bound is checked against a roundoff floor:
  // worst-case linear accumulation of one rounding per step.
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor64 = fine.steps * eps * 64.0;  // steps * eps * A / h
  c.require(fine.max_div_h <= std::max(10.0 * fine.initial_div_h, floor64),
            "div H monitor " + fmt(fine.max_div_h) + " vs floor " +
                fmt(floor64));

  c.note("N=64: RMS err " + fmt(fine.rms_error) + " (rel L2 " +
         fmt(fine.rel_l2_error) + "), drift " + fmt(fine.energy_drift) +
         ", ratio 32->64 " + fmt(ratio) + ", div H " + fmt(fine.max_div_h) +
         " from " + fmt(fine.initial_div_h));
}

void criterion_10_determinism() {
  Criterion c(10, "bitwise deterministic diagnostics", 120.0);
  const Grid3 g = Grid3::cube(16, 1.0);
  Scenario s;
  s.kind = ScenarioKind::PlaneWave;
  s.waves = {PlaneWaveComponent{1.0, {0, 0, 1}, {1.0, 0.0, 0.0}, 0.0}};
  SolverConfig cfg;
  cfg.dt = default_dt(g, 1.0);
  cfg.steps = 32;
  const ReportMeta meta{fnv1a64("acceptance"), 2026, kVersion,
                        {{"cfl", 0.5}}};
  const std::string csv1 =
      diagnostics_csv(run(s, g, cfg, UnitsConfig{}).records, meta);
  const std::string csv2 =
      diagnostics_csv(run(s, g, cfg, UnitsConfig{}).records, meta);
  c.require(csv1 == csv2, "CSV outputs differ between identical runs");
  c.note(std::to_string(csv1.size()) + " bytes compared");
}

}  // namespace

int main() {
  std::printf("octoem acceptance suite (v%s)\n", kVersion);
  criterion_1_algebra_table();
  criterion_2_random_algebra();
  criterion_3_gibbs();
  criterion_4_operator_composition();
  criterion_5_maxwell();
  criterion_6_relations();
  criterion_7_wave_sign();
  criterion_8_matter();
  criterion_9_solver();
  criterion_10_determinism();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}

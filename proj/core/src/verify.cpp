#include "octoem/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "octoem/gibbs.hpp"
#include "octoem/matrix_rep.hpp"
#include "octoem/scenarios.hpp"

namespace octoem {

namespace {

std::string pair_name(Basis u, Basis v) {
  return std::string("(") + basis_name(u) + "," + basis_name(v) + ")";
}

UnitProduct effective_product(const VerifyOptions& opt, Basis u, Basis v) {
  UnitProduct p = basis_product(u, v);
  if (opt.corrupt_table && u == opt.corrupt_u && v == opt.corrupt_v) {
    p.re = static_cast<std::int8_t>(-p.re);
    p.im = static_cast<std::int8_t>(-p.im);
  }
  return p;
}

Complex coeff_value(const UnitProduct& p) {
  return Complex{static_cast<double>(p.re), static_cast<double>(p.im)};
}

}  // namespace

bool VerifyReport::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.pass ? "  ok  " : " FAIL ") << c.name;
    if (c.max_error > 0.0) os << " (max err " << c.max_error << ")";
    if (!c.detail.empty()) os << " - " << c.detail;
    os << "\n";
  }
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["random_samples"] = random_samples;
  j["seconds"] = seconds;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"max_error", c.max_error},
                           {"detail", c.detail}});
  return j;
}

VerifyReport verify_algebra(const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.seed = opt.seed;
  report.random_samples = opt.random_samples;

  // 1. Table totality and oracle agreement over all 64 pairs.
  {
    CheckResult c{"basis products vs matrix-pair oracle (64 pairs)", true, 0, ""};
    const RepCheck rep = verify_representation();
    if (!rep.multiplicative) {
      c.pass = false;
      c.detail = "representation not multiplicative at " +
                 pair_name(rep.failed_u, rep.failed_v);
    }
    if (!rep.injective) {
      c.pass = false;
      c.detail += " representation not injective";
    }
    for (int u = 0; u < 8 && c.pass; ++u)
      for (int v = 0; v < 8; ++v) {
        const Basis bu = static_cast<Basis>(u), bv = static_cast<Basis>(v);
        const UnitProduct p = effective_product(opt, bu, bv);
        const bool coeff_ok =
            (std::abs(p.re) + std::abs(p.im) == 1);  // in {+-1, +-xi}
        const MatrixPair lhs = pair_mul(basis_rep(bu), basis_rep(bv));
        const MatrixPair img = basis_rep(p.unit);
        const MatrixPair rhs{mat_scale(coeff_value(p), img.plus),
                             mat_scale(coeff_value(p), img.minus)};
        if (!coeff_ok || !(lhs == rhs)) {
          c.pass = false;
          c.detail = "table entry " + pair_name(bu, bv) +
                     " violates the matrix oracle";
          break;
        }
      }
    report.checks.push_back(c);
  }

  // 2. Exact associativity over all 512 basis triples.
  {
    CheckResult c{"associativity on 512 basis triples", true, 0, ""};
    for (int u = 0; u < 8 && c.pass; ++u)
      for (int v = 0; v < 8 && c.pass; ++v)
        for (int w = 0; w < 8; ++w) {
          const Basis bu = static_cast<Basis>(u), bv = static_cast<Basis>(v),
                      bw = static_cast<Basis>(w);
          const UnitProduct uv = effective_product(opt, bu, bv);
          const UnitProduct uv_w = effective_product(opt, uv.unit, bw);
          const UnitProduct vw = effective_product(opt, bv, bw);
          const UnitProduct u_vw = effective_product(opt, bu, vw.unit);
          const Complex lhs = coeff_value(uv) * coeff_value(uv_w);
          const Complex rhs = coeff_value(vw) * coeff_value(u_vw);
          if (uv_w.unit != u_vw.unit || lhs != rhs) {
            c.pass = false;
            c.detail = "triple (" + std::string(basis_name(bu)) + "," +
                       basis_name(bv) + "," + basis_name(bw) +
                       ") does not associate";
            break;
          }
        }
    report.checks.push_back(c);
  }

  // 3. Unit squares, commutation of the pseudoscalar, anticommutation.
  {
    CheckResult c{"unit squares, E-commutation, anticommutation", true, 0, ""};
    for (int u = 1; u < 8; ++u) {
      const Basis b = static_cast<Basis>(u);
      const UnitProduct sq = effective_product(opt, b, b);
      if (!(sq.unit == Basis::One && sq.re == 1 && sq.im == 0)) {
        c.pass = false;
        c.detail = std::string(basis_name(b)) + "^2 != 1";
      }
    }
    for (int u = 0; u < 8; ++u) {
      const Basis b = static_cast<Basis>(u);
      const UnitProduct eu = effective_product(opt, Basis::Pseudo, b);
      const UnitProduct ue = effective_product(opt, b, Basis::Pseudo);
      if (eu.unit != ue.unit || eu.re != ue.re || eu.im != ue.im) {
        c.pass = false;
        c.detail = "E does not commute with " + std::string(basis_name(b));
      }
    }
    const Basis vecs[6] = {Basis::PolarX, Basis::PolarY, Basis::PolarZ,
                           Basis::AxialX, Basis::AxialY, Basis::AxialZ};
    for (Basis a : vecs)
      for (Basis b : vecs) {
        if (a == b) continue;
        if (detail::axis_of(a) == detail::axis_of(b)) continue;  // parallel pair
        const UnitProduct ab = effective_product(opt, a, b);
        const UnitProduct ba = effective_product(opt, b, a);
        if (ab.unit != ba.unit || ab.re != -ba.re || ab.im != -ba.im) {
          c.pass = false;
          c.detail = "nonparallel units " + pair_name(a, b) +
                     " do not anticommute";
        }
      }
    // E = -xi i j k in the implemented table.
    const Octon e = scale(Complex{0.0, -1.0},
                          multiply(multiply(Octon::unit(Basis::PolarX),
                                            Octon::unit(Basis::PolarY)),
                                   Octon::unit(Basis::PolarZ)));
    if (!(e == Octon::unit(Basis::Pseudo))) {
      c.pass = false;
      c.detail = "E != -xi i j k";
    }
    report.checks.push_back(c);
  }

  // 4. Spatial inversion is a multiplicative automorphism.
  {
    CheckResult c{"spatial inversion automorphism (64 pairs)", true, 0, ""};
    for (int u = 0; u < 8 && c.pass; ++u)
      for (int v = 0; v < 8; ++v) {
        const Octon a = Octon::unit(static_cast<Basis>(u));
        const Octon b = Octon::unit(static_cast<Basis>(v));
        if (!(spatial_inversion(multiply(a, b)) ==
              multiply(spatial_inversion(a), spatial_inversion(b)))) {
          c.pass = false;
          c.detail = "R(ab) != R(a)R(b) at " +
                     pair_name(static_cast<Basis>(u), static_cast<Basis>(v));
          break;
        }
      }
    report.checks.push_back(c);
  }

  // 5. Random octons: multiply vs oracle, associativity.
  {
    CheckResult oracle{"random multiply vs matrix-pair oracle", true, 0, ""};
    CheckResult assoc{"random associativity", true, 0, ""};
    std::mt19937_64 rng(opt.seed);
    for (int s = 0; s < opt.random_samples; ++s) {
      const Octon a = random_octon(rng);
      const Octon b = random_octon(rng);
      const Octon cc = random_octon(rng);
      const double scale_ab =
          std::max(1.0, linf_norm(a) * linf_norm(b));

      const Octon via_oracle =
          from_matrix_pair(pair_mul(to_matrix_pair(a), to_matrix_pair(b)));
      const double err =
          linf_norm(multiply(a, b) - via_oracle) / scale_ab;
      oracle.max_error = std::max(oracle.max_error, err);

      const double scale3 =
          std::max(1.0, linf_norm(a) * linf_norm(b) * linf_norm(cc));
      const double aerr = linf_norm(multiply(multiply(a, b), cc) -
                                    multiply(a, multiply(b, cc))) /
                          scale3;
      assoc.max_error = std::max(assoc.max_error, aerr);
    }
    oracle.pass = oracle.max_error <= 1e-12;
    assoc.pass = assoc.max_error <= 1e-12;
    report.checks.push_back(oracle);
    report.checks.push_back(assoc);
  }

  // 6. Gibbs correspondence on random vector/pseudovector pairs.
  {
    CheckResult c{"Gibbs correspondence (dot/cross rules)", true, 0, ""};
    std::mt19937_64 rng(opt.seed + 1);
    std::bernoulli_distribution coin;
    for (int s = 0; s < opt.gibbs_samples; ++s) {
      const bool p1 = coin(rng), a1 = coin(rng);
      const Octon v1 = random_vector_octon(rng, p1 || !a1, a1);
      const bool p2 = coin(rng), a2 = coin(rng);
      const Octon v2 = random_vector_octon(rng, p2 || !a2, a2);
      c.max_error =
          std::max(c.max_error, gibbs_correspondence_residual(v1, v2));
    }
    c.pass = c.max_error <= 1e-13;
    report.checks.push_back(c);
  }

  // 7. Grade arithmetic of products of pure vectors.
  {
    CheckResult c{"grade content of vector products", true, 0, ""};
    std::mt19937_64 rng(opt.seed + 2);
    for (int s = 0; s < 200; ++s) {
      const Octon v1 = random_vector_octon(rng, true, false);
      const Octon v2 = random_vector_octon(rng, true, false);
      const GradedParts g12 = grade_split(multiply(v1, v2));
      for (const Complex& z : g12.vector)
        c.max_error = std::max(c.max_error, std::abs(z));
      c.max_error = std::max(c.max_error, std::abs(g12.pseudoscalar));
      const Octon p2 = random_vector_octon(rng, false, true);
      const GradedParts gvp = grade_split(multiply(v1, p2));
      c.max_error = std::max(c.max_error, std::abs(gvp.scalar));
      for (const Complex& z : gvp.pseudovector)
        c.max_error = std::max(c.max_error, std::abs(z));
    }
    c.pass = c.max_error == 0.0;
    report.checks.push_back(c);
  }

  const auto t1 = std::chrono::steady_clock::now();
  report.seconds = std::chrono::duration<double>(t1 - t0).count();
  return report;
}

}  // namespace octoem

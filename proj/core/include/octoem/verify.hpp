#ifndef OCTOEM_VERIFY_HPP
#define OCTOEM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octoem/octon.hpp"

#include "json.hpp"

namespace octoem {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int random_samples = 10000;
  int gibbs_samples = 1000;
  /// Test mode: flips the sign of one product-table entry inside the
  /// verification run so the suite demonstrably catches corruption.
  bool corrupt_table = false;
  Basis corrupt_u = Basis::PolarX;
  Basis corrupt_v = Basis::PolarY;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  int random_samples = 0;
  double seconds = 0.0;

  bool pass() const;
  std::string summary() const;
  nlohmann::json to_json() const;
};

/// Full basis-table, associativity, commutation, inversion-automorphism,
/// matrix-oracle and Gibbs-correspondence suites.
VerifyReport verify_algebra(const VerifyOptions& opt = {});

}  // namespace octoem

#endif  // OCTOEM_VERIFY_HPP

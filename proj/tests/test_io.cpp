#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <random>

#include "octoem/io.hpp"
#include "octoem/scenarios.hpp"

using namespace octoem;

TEST_CASE("octon JSON text form round trips") {
  std::mt19937_64 rng(7);
  const Octon a = random_octon(rng);
  const Octon back = octon_from_json(octon_to_json(a));
  CHECK(back == a);

  CHECK_THROWS_AS(octon_from_json(nlohmann::json::array()),
                  std::invalid_argument);
  CHECK_THROWS_AS(octon_from_json(nlohmann::json::parse("[1,2,3,4,5,6,7,8]")),
                  std::invalid_argument);
}

TEST_CASE("snapshot round trips bitwise") {
  const Grid3 g({4, 5, 6}, {0.5, 0.25, 0.125});
  OctonField f(g);
  std::mt19937_64 rng(11);
  for (Octon& o : f.data) o = random_octon(rng);

  const auto dir = std::filesystem::temp_directory_path() / "octoem_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "field.oct").string();
  write_snapshot(path, f);
  write_snapshot_sidecar(path + ".json", f, 1.25);

  const OctonField back = read_snapshot(path);
  REQUIRE(back.grid == g);
  for (std::size_t s = 0; s < f.size(); ++s) CHECK(back[s] == f[s]);

  const auto sidecar = nlohmann::json::parse(read_text_file(path + ".json"));
  CHECK(sidecar["reals_per_site"] == 16);
  CHECK(sidecar["component_order"].size() == 8);
  CHECK(sidecar["time"] == 1.25);
  std::filesystem::remove_all(dir);
}

TEST_CASE("diagnostics CSV schema and reproducibility header") {
  DiagnosticsRecord r;
  r.step = 3;
  r.time = 0.125;
  r.energy = 1.0 / 3.0;
  r.momentum = {0.1, -0.2, 0.3};
  ReportMeta meta;
  meta.config_hash = fnv1a64("{}");
  meta.seed = 99;
  meta.tolerances = {{"cfl", 0.5}};
  const std::string csv = diagnostics_csv({r}, meta);

  CHECK(csv.find("step,time,energy,Sx,Sy,Sz,inv1,inv2,res_scalar,"
                 "res_pseudoscalar,res_vector,res_pseudovector,continuity,"
                 "poynting,l2err") != std::string::npos);
  CHECK(csv.find("# seed: 99") != std::string::npos);
  CHECK(csv.find("# config_hash: " + std::to_string(meta.config_hash)) !=
        std::string::npos);
  // Values are printed round-trippably.
  CHECK(csv.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("fnv1a64 is stable") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") != fnv1a64("b"));
}

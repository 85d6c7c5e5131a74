// octoem: octon algebra verification, identity convergence checks and
// time-domain simulation runs.
//
// Exit codes: 0 pass, 1 verification failure, 2 configuration error,
// 3 numerical abort.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "octoem/identities.hpp"
#include "octoem/io.hpp"
#include "octoem/solver.hpp"
#include "octoem/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace octoem;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ConfigError("config: " + path + " is not valid JSON");
  return j;
}

const json& need(const json& j, const char* field) {
  if (!j.contains(field))
    throw ConfigError(std::string("config: missing field '") + field + "'");
  return j.at(field);
}

std::vector<int> parse_levels(const std::string& csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok = csv.substr(pos, comma - pos);
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw ConfigError("config: bad level '" + tok + "' in --levels");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError("config: --levels is empty");
  return out;
}

void ensure_out_dir(const std::string& out) {
  if (!out.empty()) fs::create_directories(out);
}

std::string out_path(const std::string& out, const std::string& name) {
  return out.empty() ? name : (fs::path(out) / name).string();
}

ReportMeta make_meta(const json& config, std::uint64_t seed,
                     const json& tolerances) {
  ReportMeta meta;
  meta.config_hash = fnv1a64(config.dump());
  meta.seed = seed;
  meta.tolerances = tolerances;
  return meta;
}

void print_meta(const ReportMeta& meta) {
  std::printf("version %s, config hash %llu, seed %llu\n", meta.version.c_str(),
              static_cast<unsigned long long>(meta.config_hash),
              static_cast<unsigned long long>(meta.seed));
}

// --- simulate ------------------------------------------------------------

Grid3 grid_from_config(const json& j) {
  const json& g = need(j, "grid");
  const json& n = need(g, "n");
  if (!n.is_array() || n.size() != 3)
    throw ConfigError("config: grid.n must be an array of three integers");
  std::array<int, 3> nn{n[0].get<int>(), n[1].get<int>(), n[2].get<int>()};
  std::array<double, 3> len{1.0, 1.0, 1.0};
  if (g.contains("length")) {
    const json& l = g.at("length");
    if (!l.is_array() || l.size() != 3)
      throw ConfigError("config: grid.length must be an array of three reals");
    for (std::size_t a = 0; a < 3; ++a) len[a] = l[a].get<double>();
  }
  std::array<double, 3> origin{0.0, 0.0, 0.0};
  if (g.contains("origin")) {
    const json& o = g.at("origin");
    for (std::size_t a = 0; a < 3; ++a) origin[a] = o[a].get<double>();
  }
  try {
    return Grid3(nn, {len[0] / nn[0], len[1] / nn[1], len[2] / nn[2]}, origin);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: grid: ") + e.what());
  }
}

Scenario scenario_from_config(const json& j, const Grid3& grid) {
  const json& s = need(j, "scenario");
  const std::string kind = need(s, "kind").get<std::string>();
  Scenario out;
  if (kind == "plane_wave") {
    out.kind = ScenarioKind::PlaneWave;
    out.waves.clear();
    const json& waves = need(s, "waves");
    if (!waves.is_array() || waves.empty())
      throw ConfigError("config: scenario.waves must be a non-empty array");
    for (const json& w : waves) {
      PlaneWaveComponent comp;
      comp.amplitude = w.value("amplitude", 1.0);
      comp.phase = w.value("phase", 0.0);
      if (w.contains("mode")) {
        const json& m = w.at("mode");
        comp.mode = {m[0].get<int>(), m[1].get<int>(), m[2].get<int>()};
      } else if (w.contains("wavevector")) {
        const json& k = w.at("wavevector");
        comp.mode = mode_from_wavevector(
            {k[0].get<double>(), k[1].get<double>(), k[2].get<double>()},
            grid.length());
      } else {
        throw ConfigError(
            "config: scenario.waves entries need 'mode' or 'wavevector'");
      }
      if (w.contains("polarization")) {
        const json& p = w.at("polarization");
        comp.polarization = {p[0].get<double>(), p[1].get<double>(),
                             p[2].get<double>()};
      }
      out.waves.push_back(comp);
    }
  } else if (kind == "gaussian_pulse") {
    out.kind = ScenarioKind::GaussianPulse;
    const json& p = need(s, "pulse");
    out.pulse_amplitude = p.value("amplitude", 1.0);
    out.pulse_width = need(p, "width").get<double>();
    out.pulse_center = p.value("center", 0.5);
  } else if (kind == "static_linear") {
    out.kind = ScenarioKind::StaticLinear;
    out.linear_coeff = s.value("linear_coeff", 1.0);
  } else {
    throw ConfigError("config: unknown scenario.kind '" + kind + "'");
  }
  out.epsilon = s.value("epsilon", 1.0);
  out.mu = s.value("mu", 1.0);
  return out;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed_flag, bool allow_high_cfl) {
  const json config = load_config(config_path);
  if (config.empty()) throw ConfigError("config: simulate requires --config");

  const Grid3 grid = grid_from_config(config);
  const Scenario scenario = scenario_from_config(config, grid);
  UnitsConfig units;
  if (config.contains("units")) units.c = config["units"].value("c", 1.0);
  if (!(units.c > 0.0)) throw ConfigError("config: units.c must be positive");

  SolverConfig cfg;
  const json solver = config.value("solver", json::object());
  if (solver.contains("dt")) cfg.dt = solver["dt"].get<double>();
  if (cfg.dt == 0.0) {
    const double factor = solver.value("dt_factor", 0.25);
    cfg.dt = factor * grid.min_spacing() / units.c;
  }
  if (solver.contains("periods")) {
    const double period = grid.length()[2] / units.c;
    const double horizon = solver["periods"].get<double>() * period;
    cfg.steps = static_cast<int>(std::lround(horizon / cfg.dt));
    cfg.dt = horizon / cfg.steps;
  } else if (solver.contains("steps")) {
    cfg.steps = solver["steps"].get<int>();
  } else {
    throw ConfigError("config: solver needs 'steps' or 'periods'");
  }
  cfg.sample_interval = solver.value("sample_interval", 1);
  cfg.snapshot_cadence = solver.value("snapshot_cadence", 0);
  cfg.cfl_limit = solver.value("cfl_limit", 0.5);
  cfg.allow_high_cfl = allow_high_cfl || solver.value("allow_high_cfl", false);

  const std::uint64_t seed =
      seed_flag ? *seed_flag : config.value("seed", std::uint64_t{1});
  const json output = config.value("output", json::object());
  const std::string csv_name = output.value("csv", "diagnostics.csv");
  const std::string snap_prefix = output.value("snapshot_prefix", "snapshot");

  ensure_out_dir(out_dir);
  const ReportMeta meta = make_meta(
      config, seed,
      {{"cfl_limit", cfg.cfl_limit}, {"cfl", cfl_number(grid, cfg.dt, units.c)}});
  print_meta(meta);
  std::printf("grid %dx%dx%d, dt %.6g, steps %d, cfl %.4g\n", grid.n[0],
              grid.n[1], grid.n[2], cfg.dt, cfg.steps,
              cfl_number(grid, cfg.dt, units.c));

  int snapshot_index = 0;
  auto on_snapshot = [&](const SolverState& st) {
    char name[64];
    std::snprintf(name, sizeof name, "%s_%06d.oct", snap_prefix.c_str(),
                  st.step);
    const std::string path = out_path(out_dir, name);
    const OctonField f = field_octon({st.E, st.H});
    write_snapshot(path, f);
    write_snapshot_sidecar(path + ".json", f, st.time);
    ++snapshot_index;
  };

  const RunResult result =
      run(scenario, grid, cfg, units,
          cfg.snapshot_cadence > 0 ? std::function<void(const SolverState&)>(
                                         on_snapshot)
                                   : std::function<void(const SolverState&)>{});

  const std::string csv = diagnostics_csv(result.records, meta);
  write_text_file(out_path(out_dir, csv_name), csv);

  const double e0 = result.records.front().energy;
  double drift = 0.0, max_res = 0.0;
  for (const DiagnosticsRecord& r : result.records) {
    if (e0 > 0.0) drift = std::max(drift, std::abs(r.energy - e0) / e0);
    max_res = std::max({max_res, r.res_scalar, r.res_pseudoscalar,
                        r.res_vector, r.res_pseudovector});
  }
  std::printf("wrote %s (%zu records)%s\n",
              out_path(out_dir, csv_name).c_str(), result.records.size(),
              snapshot_index
                  ? (" and " + std::to_string(snapshot_index) + " snapshots")
                        .c_str()
                  : "");
  std::printf("relative energy drift %.3e, max residual norm %.3e\n", drift,
              max_res);
  if (!result.records.empty() && result.records.back().l2_error > 0.0)
    std::printf("final RMS error vs analytic %.3e\n",
                result.records.back().l2_error);
  return 0;
}

// --- check-identities ------------------------------------------------------

int cmd_check_identities(const std::string& config_path,
                         const std::string& out_dir,
                         const std::string& levels_csv,
                         std::optional<std::uint64_t> seed_flag,
                         std::optional<double> epsilon,
                         std::optional<double> mu) {
  const json config = load_config(config_path);
  IdentityOptions opt;
  if (config.contains("levels"))
    opt.levels = config["levels"].get<std::vector<int>>();
  if (!levels_csv.empty()) opt.levels = parse_levels(levels_csv);
  opt.seed = seed_flag ? *seed_flag : config.value("seed", std::uint64_t{1});
  opt.epsilon = epsilon ? *epsilon : config.value("epsilon", 2.0);
  opt.mu = mu ? *mu : config.value("mu", 3.0);
  if (config.contains("units")) opt.units.c = config["units"].value("c", 1.0);
  if (!(opt.units.c > 0.0)) throw ConfigError("config: units.c must be positive");
  if (!(opt.epsilon > 0.0) || !(opt.mu > 0.0))
    throw ConfigError("config: epsilon and mu must be positive");
  opt.min_order = config.value("min_order", 1.8);
  opt.exact_floor = config.value("exact_floor", 1e-9);

  for (int n : opt.levels)
    if (n < 4) throw ConfigError("config: refinement levels must be >= 4");

  const ReportMeta meta = make_meta(config, opt.seed,
                                    {{"min_order", opt.min_order},
                                     {"exact_floor", opt.exact_floor},
                                     {"agreement_linear",
                                      opt.agreement_tol_linear},
                                     {"agreement_quadratic",
                                      opt.agreement_tol_quadratic}});
  print_meta(meta);

  const IdentityReport report = check_identities(opt);
  std::fputs(report.summary().c_str(), stdout);

  if (!out_dir.empty()) {
    ensure_out_dir(out_dir);
    json j = report.to_json();
    j["config_hash"] = meta.config_hash;
    j["version"] = meta.version;
    j["tolerances"] = meta.tolerances;
    j["residual_norms"] = residual_report(opt, opt.levels.back());
    write_text_file(out_path(out_dir, "identities.json"), j.dump(2) + "\n");
    std::printf("wrote %s\n", out_path(out_dir, "identities.json").c_str());
  }
  return report.pass() ? 0 : 1;
}

// --- verify-algebra ----------------------------------------------------------

int cmd_verify_algebra(const std::string& out_dir, std::uint64_t seed,
                       int samples, bool corrupt) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.random_samples = samples;
  opt.corrupt_table = corrupt;
  const VerifyReport report = verify_algebra(opt);

  const ReportMeta meta =
      make_meta({{"samples", samples}, {"corrupt_table", corrupt}}, seed,
                {{"oracle", 1e-12}, {"gibbs", 1e-13}});
  print_meta(meta);
  std::fputs(report.summary().c_str(), stdout);
  std::printf("64/64 basis products, 512/512 associativity triples checked; "
              "%d random samples in %.2f s\n",
              samples, report.seconds);

  if (!out_dir.empty()) {
    ensure_out_dir(out_dir);
    json j = report.to_json();
    j["config_hash"] = meta.config_hash;
    j["version"] = meta.version;
    j["tolerances"] = meta.tolerances;
    write_text_file(out_path(out_dir, "verify_algebra.json"), j.dump(2) + "\n");
  }
  return report.pass() ? 0 : 1;
}

// --- convergence ---------------------------------------------------------------

int cmd_convergence(const std::string& out_dir, const std::string& levels_csv,
                    double cfl, double periods) {
  const std::vector<int> levels =
      levels_csv.empty() ? std::vector<int>{32, 64} : parse_levels(levels_csv);
  UnitsConfig units;

  const ReportMeta meta = make_meta(
      {{"levels", levels}, {"cfl", cfl}, {"periods", periods}}, 0,
      {{"ratio_low", 3.5}, {"ratio_high", 4.5}});
  print_meta(meta);

  json rows = json::array();
  std::vector<double> errs;
  for (int n : levels) {
    const SolverLevelResult r = plane_wave_solver_level(n, cfl, units, periods);
    errs.push_back(r.rms_error);
    std::printf("N=%3d  steps %5d  RMS err %.6e  rel L2 %.6e  drift %.3e  "
                "div H max %.3e\n",
                r.n, r.steps, r.rms_error, r.rel_l2_error, r.energy_drift,
                r.max_div_h);
    rows.push_back({{"n", r.n},
                    {"steps", r.steps},
                    {"rms_error", r.rms_error},
                    {"rel_l2_error", r.rel_l2_error},
                    {"energy_drift", r.energy_drift},
                    {"max_div_h", r.max_div_h}});
  }
  bool pass = true;
  for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
    const double ratio = errs[i] / errs[i + 1];
    std::printf("error ratio %d -> %d: %.3f\n", levels[i], levels[i + 1],
                ratio);
    if (ratio < 3.5 || ratio > 4.5) pass = false;
  }
  if (errs.size() >= 2) {
    const double order = fit_order(errs);
    std::printf("observed order %.3f\n", order);
  }
  std::printf("%s\n", pass ? "PASS" : "FAIL");

  if (!out_dir.empty()) {
    ensure_out_dir(out_dir);
    json j;
    j["levels"] = rows;
    j["pass"] = pass;
    j["config_hash"] = meta.config_hash;
    j["seed"] = meta.seed;
    j["version"] = meta.version;
    j["tolerances"] = meta.tolerances;
    write_text_file(out_path(out_dir, "convergence.json"), j.dump(2) + "\n");
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octon electrodynamics toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir, levels_csv;
  std::optional<std::uint64_t> seed_flag;
  std::optional<double> epsilon_flag, mu_flag;
  bool allow_high_cfl = false;

  std::uint64_t va_seed = 1;
  int va_samples = 10000;
  bool va_corrupt = false;

  double cv_cfl = 0.25;
  double cv_periods = 1.0;

  auto* verify = app.add_subcommand("verify-algebra",
                                    "run the octon algebra verification suite");
  verify->add_option("--seed", va_seed, "random seed");
  verify->add_option("--samples", va_samples, "random octon sample count");
  verify->add_flag("--corrupt-table", va_corrupt,
                   "test mode: corrupt the (i,j) table entry");
  verify->add_option("--out", out_dir, "output directory for the JSON report");

  auto* check = app.add_subcommand(
      "check-identities", "refinement study of every residual identity");
  check->add_option("--config", config_path, "JSON configuration file");
  check->add_option("--levels", levels_csv, "comma separated grid levels");
  check->add_option("--seed", seed_flag, "random seed");
  check->add_option("--epsilon", epsilon_flag, "matter permittivity");
  check->add_option("--mu", mu_flag, "matter permeability");
  check->add_option("--out", out_dir, "output directory");

  auto* sim = app.add_subcommand("simulate", "time-domain solver run");
  sim->add_option("--config", config_path, "JSON configuration file")
      ->required();
  sim->add_option("--out", out_dir, "output directory");
  sim->add_option("--seed", seed_flag, "seed recorded in the report");
  sim->add_flag("--allow-high-cfl", allow_high_cfl,
                "override the cfl <= 0.5 guard");

  auto* conv = app.add_subcommand(
      "convergence", "plane-wave solver refinement study");
  conv->add_option("--levels", levels_csv, "comma separated grid levels");
  conv->add_option("--cfl", cv_cfl, "cfl factor (dt = cfl h / c)");
  conv->add_option("--periods", cv_periods, "wave periods to integrate");
  conv->add_option("--out", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return cmd_verify_algebra(out_dir, va_seed, va_samples, va_corrupt);
    if (check->parsed())
      return cmd_check_identities(config_path, out_dir, levels_csv, seed_flag,
                                  epsilon_flag, mu_flag);
    if (sim->parsed())
      return cmd_simulate(config_path, out_dir, seed_flag, allow_high_cfl);
    if (conv->parsed())
      return cmd_convergence(out_dir, levels_csv, cv_cfl, cv_periods);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const SolverAbort& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

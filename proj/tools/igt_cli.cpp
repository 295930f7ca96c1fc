// Command-line driver: every verification pipeline as a subcommand with JSON
// config and CSV/JSON reports.  Exit codes: 0 all checks pass, 1 some check
// failed, 2 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "igt/checks.hpp"
#include "igt/constants.hpp"

namespace fs = std::filesystem;
using igt::FrozenConstants;
using igt::Report;
using igt::checks::RunConfig;

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir = "igt-out";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int jobs = 1;
};

RunConfig load_config(const CliOptions& opt) {
  RunConfig cfg;
  if (!opt.config_path.empty()) cfg = RunConfig::from_json_file(opt.config_path);
  if (opt.seed_set) cfg.seed = opt.seed;
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  cfg.jobs = opt.jobs;
  cfg.quad.validate();
  return cfg;
}

std::string constants_path(const RunConfig& cfg) {
  return (fs::path(cfg.out_dir) / "constants.json").string();
}

FrozenConstants load_constants(const RunConfig& cfg) {
  const std::string path = constants_path(cfg);
  if (!fs::exists(path))
    throw std::runtime_error("constants file missing (" + path + "); run `calibrate` first");
  FrozenConstants c = FrozenConstants::load(path);
  if (!c.complete()) throw std::runtime_error("constants file incomplete; re-run `calibrate`");
  return c;
}

int emit(const RunConfig& cfg, const std::string& name, const Report& rep) {
  fs::create_directories(cfg.out_dir);
  {
    std::ofstream csv(fs::path(cfg.out_dir) / (name + ".csv"));
    rep.write_csv(csv);
  }
  {
    std::ofstream js(fs::path(cfg.out_dir) / (name + ".json"));
    js << rep.to_json();
  }
  for (const auto& r : rep.rows)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  value=" << r.value
              << "  tol=" << r.tolerance << "\n";
  std::cout << name << ": " << (rep.rows.size() - rep.n_fail()) << "/" << rep.rows.size()
            << " checks passed\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral-geometry transform verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CliOptions opt;
  app.add_option("--config", opt.config_path, "JSON run configuration");
  app.add_option("--out", opt.out_dir, "output directory for reports and constants");
  auto* seed_opt = app.add_option("--seed", opt.seed, "seed for randomized probe placement");
  app.add_option("--jobs", opt.jobs, "internal parallelism (advisory)");

  const std::vector<std::string> subs = {
      "calibrate",       "euclid-invert",      "hyp-invert",   "product-invert",
      "horocycle-roundtrip", "horocycle-range", "support-scan", "abel-identities",
      "fourier-plancherel",  "rl-scan",         "all"};
  for (const auto& s : subs) app.add_subcommand(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opt.seed_set = seed_opt->count() > 0;

  try {
    const RunConfig cfg = load_config(opt);
    const std::string sub = app.get_subcommands().front()->get_name();

    if (sub == "calibrate") {
      const FrozenConstants c = igt::checks::calibrate(cfg.quad);
      fs::create_directories(cfg.out_dir);
      c.save(constants_path(cfg));
      std::cout << "constants written to " << constants_path(cfg) << "\n";
      return emit(cfg, "calibrate", igt::checks::calibrate_report(c));
    }

    const FrozenConstants c = load_constants(cfg);
    Report rep;
    if (sub == "euclid-invert") rep = igt::checks::check_euclid_invert(cfg, c);
    else if (sub == "hyp-invert") rep = igt::checks::check_hyp_invert(cfg, c);
    else if (sub == "product-invert") rep = igt::checks::check_product_invert(cfg, c);
    else if (sub == "horocycle-roundtrip") rep = igt::checks::check_horocycle_roundtrip(cfg, c);
    else if (sub == "horocycle-range") rep = igt::checks::check_horocycle_range(cfg, c);
    else if (sub == "support-scan") rep = igt::checks::check_support_scan(cfg, c);
    else if (sub == "abel-identities") rep = igt::checks::check_abel_identities(cfg, c);
    else if (sub == "fourier-plancherel") rep = igt::checks::check_fourier_plancherel(cfg, c);
    else if (sub == "rl-scan") rep = igt::checks::check_rl_scan(cfg, c);
    else if (sub == "all") {
      rep = igt::checks::run_all(cfg, c);
      rep.append(igt::checks::calibrate_report(c));
    } else {
      std::cerr << "unknown subcommand\n";
      return 2;
    }
    return emit(cfg, sub, rep);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}

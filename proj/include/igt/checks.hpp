#pragma once

// Verification pipelines: one function per acceptance area, each returning a
// Report of named residual rows; plus the calibration that freezes every
// global constant.  Shared by the command-line driver and the acceptance
// suite.

#include <cstdint>
#include <string>

#include "igt/constants.hpp"
#include "igt/geometry.hpp"
#include "igt/numerics.hpp"
#include "igt/report.hpp"
#include "igt/spectral.hpp"

namespace igt::checks {

struct RunConfig {
  RunConfig() {
    phantom.kind = geo::PhantomSpec::Kind::CompactBump;
    phantom.support_radius = 1.0;
  }

  num::QuadratureSpec quad;
  geo::PhantomSpec phantom;             // primary phantom where one applies
  std::array<double, 4> center{0, 0, 0, 0};
  double R = 1.0;                       // support-scan ball radius
  int probe_count = 0;                  // 0 keeps each check's default
  std::uint64_t seed = 12345;
  std::string out_dir = ".";
  int jobs = 2;

  static RunConfig from_json(const std::string& text);       // unknown keys rejected
  static RunConfig from_json_file(const std::string& path);  // throws on missing file
};

// Freezes c(d), C(d), kappa, the Xi-measure exponent and the range-law
// normalization on reference phantoms.
FrozenConstants calibrate(const num::QuadratureSpec& spec);
Report calibrate_report(const FrozenConstants& c);

SpectralSetup make_setup(const num::QuadratureSpec& spec, const FrozenConstants& c);

Report check_euclid_invert(const RunConfig& cfg, const FrozenConstants& c);
Report check_hyp_invert(const RunConfig& cfg, const FrozenConstants& c);
Report check_product_invert(const RunConfig& cfg, const FrozenConstants& c);
Report check_horocycle_roundtrip(const RunConfig& cfg, const FrozenConstants& c);
Report check_horocycle_range(const RunConfig& cfg, const FrozenConstants& c);
Report check_support_scan(const RunConfig& cfg, const FrozenConstants& c);
Report check_abel_identities(const RunConfig& cfg, const FrozenConstants& c);
Report check_fourier_plancherel(const RunConfig& cfg, const FrozenConstants& c);
Report check_rl_scan(const RunConfig& cfg, const FrozenConstants& c);
Report check_oracle_hygiene(const RunConfig& cfg, const FrozenConstants& c);
Report run_all(const RunConfig& cfg, const FrozenConstants& c);

}  // namespace igt::checks

// Acceptance suite: calibrates the frozen constants, then runs every
// verification pipeline at its stated tolerance and prints one PASS/FAIL line
// per check.  Exit code 0 iff everything passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "igt/checks.hpp"

int main() {
  using namespace igt;
  using Clock = std::chrono::steady_clock;

  checks::RunConfig cfg;
  cfg.jobs = 2;
  cfg.out_dir = "acceptance-out";

  const auto t0 = Clock::now();
  std::printf("calibrating frozen constants...\n");
  const FrozenConstants c = checks::calibrate(cfg.quad);
  std::printf("  kappa=%.8f  c(2)=%.8f  C(2)=%.8f  mu_exp=%.6f  kappa0=%.2f  mu=%.2f\n",
              c.kappa, c.c_d_3_2, c.C_d_3_2, c.horocycle_mu_exponent, c.range_kappa0,
              c.range_mu);

  Report rep = checks::run_all(cfg, c);

  // calibration reproducibility: a second run must reproduce the constants
  {
    const FrozenConstants c2 = checks::calibrate(cfg.quad);
    double worst = 0.0;
    worst = std::max(worst, std::abs(c2.kappa - c.kappa) / std::abs(c.kappa));
    worst = std::max(worst, std::abs(c2.c_d_3_2 - c.c_d_3_2) / std::abs(c.c_d_3_2));
    worst = std::max(worst, std::abs(c2.C_d_3_2 - c.C_d_3_2) / std::abs(c.C_d_3_2));
    worst = std::max(worst, std::abs(c2.horocycle_mu_exponent - c.horocycle_mu_exponent));
    worst = std::max(worst, std::abs(c2.range_kappa0 - c.range_kappa0));
    worst = std::max(worst, std::abs(c2.range_mu - c.range_mu));
    rep.add(ReportRow::residual("calibration_reproducibility", "Eq 3.3 / 4.1 / 8.2", worst, 1e-6));
  }

  for (const auto& r : rep.rows) {
    std::printf("%s  %-38s  value=%.6g  tol=%.3g  [%s]\n", r.pass ? "PASS" : "FAIL",
                r.check_id.c_str(), r.value, r.tolerance, r.paper_anchor.c_str());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%d/%zu checks passed in %.1f s\n",
              static_cast<int>(rep.rows.size()) - rep.n_fail(), rep.rows.size(), secs);

  std::ofstream csv("acceptance_report.csv");
  rep.write_csv(csv);
  return rep.all_pass() ? 0 : 1;
}

#pragma once

// The frozen calibration constants: determined once by `calibrate`, written
// to a JSON constants file, and consumed by every later run.

#include <limits>
#include <string>

namespace igt {

struct FrozenConstants {
  static constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  double c_d_3_2 = nan;                // Euclidean (n,d)=(3,2) inversion constant
  double C_d_3_2 = nan;                // hyperbolic (n,d)=(3,2) inversion constant
  double kappa = nan;                  // global Plancherel normalization
  double horocycle_mu_exponent = nan;  // measured exponent a of d mu = e^{a t} dt dtheta/2pi
  double range_kappa0 = nan;           // resolved weight in Psi_n = e^{kappa0 t} psi_n
  double range_mu = nan;               // resolved lambda scaling of shat_n

  bool complete() const;
  std::string to_json() const;
  static FrozenConstants from_json(const std::string& text);  // exact keys enforced
  void save(const std::string& path) const;
  static FrozenConstants load(const std::string& path);
};

}  // namespace igt

#include "igt/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace igt {

void SpectralSetup::require_frozen() const {
  if (!frozen())
    throw std::logic_error("spectral normalization kappa is not frozen; run calibrate first");
}

double SpectralSetup::mu(double lambda) const {
  require_frozen();
  return 2.0 * num::kPi * kappa * cfn->density_raw(lambda);
}

num::Multiplier SpectralSetup::mu_multiplier() const {
  require_frozen();
  const auto& raw = cfn->density_bins(spec.grid_N, spec.grid_T);
  num::Multiplier m;
  m.bins.resize(raw.size());
  const double pref = 2.0 * num::kPi * kappa;
  for (size_t j = 0; j < raw.size(); ++j) m.bins[j] = pref * raw[j];
  return m;
}

num::Multiplier SpectralSetup::sqrt_mu_multiplier() const {
  require_frozen();
  const auto& raw = cfn->density_bins(spec.grid_N, spec.grid_T);
  num::Multiplier m;
  m.bins.resize(raw.size());
  const double pref = 2.0 * num::kPi * kappa;
  for (size_t j = 0; j < raw.size(); ++j) m.bins[j] = std::sqrt(pref * raw[j]);
  return m;
}

}  // namespace igt

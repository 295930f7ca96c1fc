#pragma once

// Bundle of the quadrature spec, the c-function oracle and the single frozen
// Plancherel normalization kappa.  The normalized density
//   mu(lambda) = 2 pi kappa |c(lambda)|^{-2}
// is the multiplier of the L-operator, of Lambda Lambda-bar, and (as
// kappa |c|^{-2} d lambda) the spectral measure of inversion and Plancherel.

#include <limits>
#include <memory>

#include "igt/cfunction.hpp"
#include "igt/numerics.hpp"

namespace igt {

struct SpectralSetup {
  num::QuadratureSpec spec;
  std::shared_ptr<const num::CFunction> cfn;
  double kappa = std::numeric_limits<double>::quiet_NaN();

  SpectralSetup() : cfn(std::make_shared<num::CFunction>()) {}
  explicit SpectralSetup(const num::QuadratureSpec& s, double kappa_v = std::numeric_limits<double>::quiet_NaN())
      : spec(s), cfn(std::make_shared<num::CFunction>()), kappa(kappa_v) {}

  bool frozen() const { return kappa == kappa; }
  void require_frozen() const;

  double density_raw(double lambda) const { return cfn->density_raw(lambda); }
  double mu(double lambda) const;

  // FFT-bin multipliers on the grid of an EvenGridFunction(grid_T, grid_N).
  num::Multiplier mu_multiplier() const;        // mu(lambda)
  num::Multiplier sqrt_mu_multiplier() const;   // sqrt(mu): the single Lambda
};

}  // namespace igt

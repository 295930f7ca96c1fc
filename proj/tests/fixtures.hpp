#pragma once

// Shared calibration for the spectral-side tests: frozen once per binary run.

#include "igt/checks.hpp"

inline const igt::FrozenConstants& frozen_constants() {
  static const igt::FrozenConstants c = igt::checks::calibrate(igt::num::QuadratureSpec{});
  return c;
}

inline const igt::SpectralSetup& spectral_setup() {
  static const igt::SpectralSetup s =
      igt::checks::make_setup(igt::num::QuadratureSpec{}, frozen_constants());
  return s;
}

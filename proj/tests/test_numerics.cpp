#include <doctest.h>

#include <cmath>
#include <complex>

#include "igt/numerics.hpp"
#include "igt/cfunction.hpp"
#include "oracles.hpp"

using namespace igt;
using num::cplx;
using num::QuadratureSpec;

namespace {
const QuadratureSpec kSpec{};
}

TEST_CASE("integrate_line hits the Gaussian closed form") {
  auto g = [](double s) { return std::exp(-s * s); };
  const double v = num::integrate_line(g, num::Decay::gaussian(1.0), 0.0, kSpec);
  CHECK(v == doctest::Approx(1.7724538509055160).epsilon(1e-12));

  const double z = num::integrate_line([](double) { return 0.0; },
                                       num::Decay::gaussian(1.0), 0.0, kSpec);
  CHECK(z == 0.0);

  const double odd = num::integrate_line([](double s) { return s * std::exp(-s * s); },
                                         num::Decay::gaussian(1.0), 0.0, kSpec);
  CHECK(std::abs(odd) < 1e-12);
}

TEST_CASE("integrate_line refuses without decay metadata") {
  CHECK_THROWS_AS(num::integrate_line([](double) { return 1.0; }, num::Decay{}, 0.0, kSpec),
                  std::invalid_argument);
}

TEST_CASE("integrate_circle basics") {
  CHECK(num::integrate_circle([](double) { return 3.25; }, 16) == doctest::Approx(3.25));
  const double oscillating =
      num::integrate_circle([](double th) { return std::cos(5.0 * th); }, 32);
  CHECK(std::abs(oscillating) < 1e-14);
  CHECK(num::integrate_circle([](double th) { return std::cos(th) * std::cos(th); }, 16) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("weighted_tail_integral") {
  SUBCASE("F(p)=p against dp/p on (0,1] integrates to ~1") {
    QuadratureSpec s = kSpec;
    s.p_cutoff_high = 1.0;
    const auto r = num::weighted_tail_integral([](double p) { return p; },
                                               num::TailWeight::OneOverP, s);
    CHECK(r.value == doctest::Approx(1.0 - s.p_cutoff_low).epsilon(1e-12));
    CHECK(!r.divergence_flag);
  }
  SUBCASE("zero integrand") {
    const auto r = num::weighted_tail_integral([](double) { return 0.0; },
                                               num::TailWeight::OneOverSinhP, kSpec);
    CHECK(r.value == 0.0);
  }
  SUBCASE("p e^{-p} against dp/sinh p matches the adaptive oracle") {
    QuadratureSpec s = kSpec;
    s.p_cutoff_high = 20.0;
    const auto r = num::weighted_tail_integral([](double p) { return p * std::exp(-p); },
                                               num::TailWeight::OneOverSinhP, s);
    const double ref = oracle::integrate(
        [](double p) { return p * std::exp(-p) / std::sinh(p); }, s.p_cutoff_low, 20.0, 1e-12);
    CHECK(r.value == doctest::Approx(ref).epsilon(1e-10));
  }
  SUBCASE("divergent integrand raises the flag") {
    const auto r = num::weighted_tail_integral([](double) { return 1.0; },
                                               num::TailWeight::OneOverP, kSpec);
    CHECK(r.divergence_flag);
  }
}

TEST_CASE("d_dp") {
  CHECK(num::d_dp([](double p) { return p * p; }, 1.0, 1e-2).value ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(std::abs(num::d_dp([](double) { return 4.7; }, 1.0, 1e-2).value) < 1e-12);
  const auto r = num::d_dp([](double p) { return std::exp(-p * p); }, 0.7, 1e-2);
  CHECK(r.value == doctest::Approx(-0.8576769518581825).epsilon(1e-8));
  CHECK(!r.clamped);
  const auto c = num::d_dp([](double p) { return p * p; }, 0.01, 1e-2);
  CHECK(c.clamped);
  CHECK(c.value == doctest::Approx(0.02).epsilon(1e-6));
}

TEST_CASE("iterated_r2_derivative") {
  CHECK(num::iterated_r2_derivative([](double r) { return r * r; }, 1, 0.9, 0.02) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(num::iterated_r2_derivative([](double r) { return std::pow(r, 4); }, 2, 0.8, 0.02) ==
        doctest::Approx(2.0).epsilon(1e-8));
  CHECK(num::iterated_r2_derivative([](double r) { return std::exp(-r * r); }, 1, 0.0, 0.005) ==
        doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("fft multiplier with unit symbol is the identity") {
  num::EvenGridFunction g(24.0, 4096, true);
  g.fill([](double t) { return std::exp(-t * t); });

  const num::Multiplier one = num::Multiplier::from_function(g.N, g.T, [](double) {
    return cplx(1.0, 0.0);
  });
  const num::EvenGridFunction h = num::apply_multiplier(g, one);
  double worst = 0.0;
  for (int k = 0; k < g.N; ++k) worst = std::max(worst, std::abs(h.v[k] - g.v[k]));
  CHECK(worst < 1e-12);
}

TEST_CASE("multiplier acts as the symbol on a windowed wave") {
  num::EvenGridFunction g(40.0, 8192, false);
  const double l0 = num::Multiplier::bin_lambda(64, 8192, 40.0);
  g.fill([&](double t) { return std::cos(l0 * t) * std::exp(-(t / 8.0) * (t / 8.0)); });
  auto m = [](double l) { return cplx(1.0 + 0.1 * l * l, 0.0); };
  const num::EvenGridFunction h =
      num::apply_multiplier(g, num::Multiplier::from_function(g.N, g.T, m));
  // output = m(l0) g up to the symbol-derivative drift m'(l0) w'(t)
  const double target = 1.0 + 0.1 * l0 * l0;
  double worst = 0.0;
  for (double t = -3.0; t <= 3.0; t += 0.1)
    worst = std::max(worst, std::abs(h.interp(t) - target * g.interp(t)));
  CHECK(worst < 0.04 * target);
}

TEST_CASE("discrete Parseval") {
  num::EvenGridFunction g(24.0, 4096, false);
  g.fill([](double t) { return std::exp(-t * t) * (1.0 + 0.3 * t); });
  std::vector<cplx> w(g.v.begin(), g.v.end());
  num::fft_inplace(w, false);
  double time_side = 0.0, freq_side = 0.0;
  for (double x : g.v) time_side += x * x;
  for (const cplx& z : w) freq_side += std::norm(z);
  CHECK(time_side == doctest::Approx(freq_side / g.N).epsilon(1e-12));
}

TEST_CASE("m then 1/m is the identity") {
  num::EvenGridFunction g(24.0, 4096, false);
  g.fill([](double t) { return std::exp(-0.5 * t * t); });
  auto m = [](double l) { return cplx(1.0 + l * l, 0.0); };
  auto minv = [&](double l) { return 1.0 / m(l); };
  const auto mm = num::Multiplier::from_function(g.N, g.T, m);
  const auto mi = num::Multiplier::from_function(g.N, g.T, minv);
  const num::EvenGridFunction h = num::apply_multiplier(num::apply_multiplier(g, mm), mi);
  double worst = 0.0;
  for (int k = 0; k < g.N; ++k) worst = std::max(worst, std::abs(h.v[k] - g.v[k]));
  CHECK(worst < 1e-10);
}

TEST_CASE("wraparound is rejected with the required grid_T") {
  num::EvenGridFunction g(24.0, 4096, false);
  g.fill([](double t) { return std::cos(t); });
  const auto one =
      num::Multiplier::from_function(g.N, g.T, [](double) { return cplx(1.0, 0.0); });
  CHECK_THROWS_WITH_AS(num::apply_multiplier(g, one), doctest::Contains("grid_T"),
                       std::invalid_argument);
}

TEST_CASE("real-output multiplier symmetry check") {
  // the imaginary part is odd and vanishes at the Nyquist bin
  const auto good = num::Multiplier::from_function(
      256, 8.0, [](double l) { return cplx(l * l, std::sin(0.5 * l * 8.0)); });
  CHECK_NOTHROW(good.check_real_output(256, 8.0));
  auto bad = good;
  bad.bins[3] += cplx(0.0, 1.0);
  CHECK_THROWS_AS(bad.check_real_output(256, 8.0), std::invalid_argument);
}

TEST_CASE("EvenGridFunction evenness validation") {
  num::EvenGridFunction g(8.0, 256, true);
  CHECK_NOTHROW(g.fill([](double t) { return std::exp(-t * t); }));
  num::EvenGridFunction h(8.0, 256, true);
  CHECK_THROWS_AS(h.fill([](double t) { return t * std::exp(-t * t); }), std::invalid_argument);
}

TEST_CASE("grid convolution against the closed form") {
  num::EvenGridFunction a(24.0, 4096, false), b(24.0, 4096, false);
  a.fill([](double t) { return std::exp(-t * t); });
  b.fill([](double t) { return std::exp(-t * t); });
  const num::EvenGridFunction c = num::grid_convolution(a, b);
  // (e^{-t^2} * e^{-t^2})(t) = sqrt(pi/2) e^{-t^2/2}
  for (double t : {0.0, 0.7, 1.5, -2.2}) {
    CHECK(c.interp(t) ==
          doctest::Approx(std::sqrt(num::kPi / 2.0) * std::exp(-0.5 * t * t)).epsilon(1e-9));
  }
}

TEST_CASE("quadratures converge at the expected order under refinement") {
  auto g = [](double s) { return std::exp(-s * s) * std::cos(6.0 * s); };
  const double exact = num::panel_gauss(g, -6.0, 6.0, 48, 2);
  const double e1 = std::abs(num::panel_gauss(g, -6.0, 6.0, 8, 2) - exact);
  const double e2 = std::abs(num::panel_gauss(g, -6.0, 6.0, 16, 2) - exact);
  CHECK(e1 / e2 >= 8.0);

  auto F = [](double p) { return std::exp(-p * p) * std::cos(2.0 * p); };
  const double dref =
      -2.0 * 0.7 * std::exp(-0.49) * std::cos(1.4) - 2.0 * std::exp(-0.49) * std::sin(1.4);
  const double d1 = std::abs(num::d_dp(F, 0.7, 0.2).value - dref);
  const double d2 = std::abs(num::d_dp(F, 0.7, 0.1).value - dref);
  CHECK(d1 / d2 >= 8.0);
}

TEST_CASE("SampledFunction reproduces smooth profiles") {
  num::SampledFunction s(num::profile_nodes(6.0, 0.05),
                         [](double p) { return std::exp(-p * p) * (1.0 + p); });
  double worst = 0.0;
  for (double p = 0.0; p < 5.9; p += 0.0137)
    worst = std::max(worst, std::abs(s(p) - std::exp(-p * p) * (1.0 + p)));
  CHECK(worst < 1e-5);
}

TEST_CASE("c-function oracle") {
  const num::CFunction cf;
  SUBCASE("even and positive") {
    for (double l : {0.5, 1.0, 2.0, 5.0}) {
      CHECK(cf.density_raw(l) > 0.0);
      CHECK(cf.density_raw(l) == doctest::Approx(cf.density_raw(-l)).epsilon(1e-8));
    }
  }
  SUBCASE("asymptotic fit is internally consistent") {
    CHECK(cf.fit_residual(1.0) < 1e-6);
  }
  SUBCASE("cutoff independence of the fit window") {
    const num::CFunction far(22.0);
    for (double l : {0.5, 1.0, 2.0, 5.0}) {
      CHECK(cf.density_raw(l) == doctest::Approx(far.density_raw(l)).epsilon(1e-6));
    }
  }
  SUBCASE("dense bins agree with pointwise fits") {
    const auto& bins = cf.density_bins(512, 24.0);
    for (int j : {1, 7, 32, 100, 255}) {
      const double l = num::Multiplier::bin_lambda(j, 512, 24.0);
      CHECK(bins[j] == doctest::Approx(cf.density_raw(l)).epsilon(1e-9));
    }
  }
  SUBCASE("small-lambda branch continues the density smoothly") {
    const double d1 = cf.density_raw(0.049);  // extrapolated branch
    const double d2 = cf.density_raw(0.051);  // fitted branch
    CHECK(d1 == doctest::Approx(d2).epsilon(0.2));
    CHECK(cf.density_raw(0.0) == 0.0);
  }
}

TEST_CASE("spherical function evaluator basics") {
  CHECK(num::spherical_phi(0.9, 0.0) == doctest::Approx(1.0));
  // W-invariance
  CHECK(num::spherical_phi(1.1, 1.3) == doctest::Approx(num::spherical_phi(-1.1, 1.3)).epsilon(1e-12));
  // eigenvalue sanity through the radial ODE: phi'' + coth(t) phi' = -(l^2+1/4) phi
  const double l = 0.8, t = 1.1, h = 1e-3;
  auto phi = [&](double tt) { return num::spherical_phi(l, tt); };
  const double d2 = (phi(t + h) - 2.0 * phi(t) + phi(t - h)) / (h * h);
  const double d1 = (phi(t + h) - phi(t - h)) / (2.0 * h);
  CHECK(d2 + d1 / std::tanh(t) == doctest::Approx(-(l * l + 0.25) * phi(t)).epsilon(1e-6));
}

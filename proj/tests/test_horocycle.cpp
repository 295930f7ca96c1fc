#include <doctest.h>

#include <cmath>
#include <sstream>

#include "igt/abel.hpp"
#include "igt/horocycle.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace igt;
using geo::Horocycle;
using geo::HypPoint;
using num::QuadratureSpec;

namespace {

const QuadratureSpec kSpec{};

geo::DiskField disk_gaussian(double width = 0.8) {
  geo::PhantomSpec ps;
  ps.kind = geo::PhantomSpec::Kind::GaussianOfDistance;
  ps.width = width;
  return geo::phantom_disk(ps, HypPoint());
}

geo::DiskField disk_bump(double R, HypPoint center = HypPoint(), double amp = 1.0) {
  geo::PhantomSpec ps;
  ps.kind = geo::PhantomSpec::Kind::CompactBump;
  ps.support_radius = R;
  ps.amplitude = amp;
  return geo::phantom_disk(ps, center);
}

}  // namespace

TEST_CASE("horocycle forward transform") {
  SUBCASE("radial fields are tangency-angle independent") {
    const auto f = disk_gaussian();
    const double a = horo::horocycle_forward(f, Horocycle{0.7, 0.0}, kSpec);
    const double b = horo::horocycle_forward(f, Horocycle{0.7, 1.9}, kSpec);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
  SUBCASE("compact support empties horocycles beyond |t| = R") {
    const auto f = disk_bump(1.0);
    CHECK(std::abs(horo::horocycle_forward(f, Horocycle{1.05, 0.3}, kSpec, 1.0)) < 1e-14);
    CHECK(std::abs(horo::horocycle_forward(f, Horocycle{-1.3, 2.0}, kSpec, 1.0)) < 1e-14);
    CHECK(horo::horocycle_forward(f, Horocycle{0.6, 0.0}, kSpec) > 0.0);
  }
}

TEST_CASE("horocycle dual transform") {
  SUBCASE("constants stay fixed (Poisson mean one)") {
    const HypPoint z(geo::cplx(0.4, -0.35));
    CHECK(horo::horocycle_dual([](const Horocycle&) { return 1.75; }, z, 64) ==
          doctest::Approx(1.75).epsilon(1e-12));
  }
  SUBCASE("at the origin it is the plain circle average") {
    auto phi = [](const Horocycle& xi) { return std::cos(3.0 * xi.theta) + 2.0; };
    CHECK(horo::horocycle_dual(phi, HypPoint(), 64) == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("duality with the measured Xi measure") {
  const auto& c = frozen_constants();
  const auto f = disk_gaussian();
  auto phi = [](const Horocycle& xi) {
    return std::exp(-xi.t * xi.t) * (1.0 + 0.3 * std::cos(xi.theta));
  };
  const double lhs = geo::disk_integral(
      [&](const HypPoint& z) { return f(z) * horo::horocycle_dual(phi, z, 64); },
      f.decay.cutoff_radius(), kSpec, 64);
  const horo::HorocycleSinogram psi = horo::forward_sinogram(f, kSpec, 64);
  double rhs = 0.0;
  for (int k = 0; k < psi.N; ++k) {
    const double t = psi.t_at(k);
    if (std::abs(t) > 12.0) continue;
    double row = 0.0;
    for (int j = 0; j < psi.J; ++j) row += psi.at(k, j) * phi(Horocycle{t, psi.theta_at(j)});
    rhs += (row / psi.J) * std::exp(c.horocycle_mu_exponent * t) * psi.dt();
  }
  CHECK(rhs == doctest::Approx(lhs).epsilon(1e-6));
}

TEST_CASE("Lambda inversion round trip") {
  const auto& setup = spectral_setup();
  const auto f = disk_gaussian();
  const horo::HorocycleSinogram psi = horo::forward_sinogram(f, kSpec, 64);
  const horo::LambdaInverter inv(psi, setup);
  SUBCASE("at the origin and off center") {
    CHECK(std::abs(inv(HypPoint()) - 1.0) < 1e-2);
    for (double r : {0.5, 1.0}) {
      const HypPoint z(std::tanh(0.5 * r) * geo::cplx(std::cos(1.1), std::sin(1.1)));
      CHECK(std::abs(inv(z) - f(z)) < 1e-2);
    }
  }
  SUBCASE("zero sinogram inverts to zero") {
    horo::HorocycleSinogram z(kSpec.grid_T, kSpec.grid_N, 64);
    CHECK(std::abs(horo::lambda_invert(z, HypPoint(geo::cplx(0.2, 0.1)), setup)) < 1e-14);
  }
}

TEST_CASE("horocycle Plancherel") {
  const auto& setup = spectral_setup();
  SUBCASE("zero field") {
    geo::DiskField z;
    z.decay = num::Decay::compact(1.0);
    z.f = [](const HypPoint&) { return 0.0; };
    const auto pr = horo::plancherel_horocycle(z, kSpec, setup, 64);
    CHECK(pr.lhs == 0.0);
    CHECK(pr.rhs == doctest::Approx(0.0));
  }
  SUBCASE("homogeneous of degree two") {
    const auto f = disk_bump(1.0);
    const auto f2 = disk_bump(1.0, HypPoint(), 2.0);
    const auto a = horo::plancherel_horocycle(f, kSpec, setup, 64);
    const auto b = horo::plancherel_horocycle(f2, kSpec, setup, 64);
    CHECK(b.lhs == doctest::Approx(4.0 * a.lhs).epsilon(1e-10));
    CHECK(b.rhs == doctest::Approx(4.0 * a.rhs).epsilon(1e-10));
  }
  SUBCASE("balances at ratio one") {
    const auto f = disk_bump(1.2);
    const auto pr = horo::plancherel_horocycle(f, kSpec, setup, 64);
    CHECK(pr.ratio == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("range coefficients") {
  SUBCASE("radial sinograms live in the n = 0 mode") {
    const auto f = disk_gaussian();
    const auto rc = horo::range_coefficients(horo::forward_sinogram(f, kSpec, 64));
    double off = 0.0;
    for (int n = 1; n < 8; ++n) {
      for (int k = 0; k < rc.N; k += 37) off = std::max(off, std::abs(rc.coef(k, n)));
    }
    CHECK(off < 1e-12);
  }
  SUBCASE("reality pairs the modes") {
    const auto f = disk_bump(0.6, HypPoint(geo::cplx(0.3, 0.2)));
    const auto psi = horo::forward_sinogram(f, kSpec, 64);
    const auto rc = horo::range_coefficients(psi);
    for (int n : {1, 2, 3}) {
      for (int k = 1800; k < 2300; k += 53) {
        CHECK(std::abs(rc.coef(k, -n) - std::conj(rc.coef(k, n))) < 1e-12);
      }
    }
    CHECK(rc.reconstruction_residual(psi) < 1e-10);
  }
}

TEST_CASE("range law multipliers") {
  const auto& c = frozen_constants();
  SUBCASE("unit modulus on the real axis") {
    for (int n : {1, 2, 3}) {
      for (double l : {0.1, 1.0, 7.3, 40.0}) {
        CHECK(std::abs(std::abs(horo::s_hat(n, l, c.range_mu)) - 1.0) < 1e-12);
      }
    }
  }
  SUBCASE("forward sinograms satisfy the relation; perturbations break it") {
    geo::PhantomSpec ps;
    ps.kind = geo::PhantomSpec::Kind::TranslatedBump;
    ps.support_radius = 0.6;
    const auto f = geo::phantom_disk(ps, HypPoint(std::tanh(0.35)));
    const auto rc = horo::range_coefficients(horo::forward_sinogram(f, kSpec, 64));
    const auto base = horo::range_multiplier_check(rc, 1, c.range_kappa0, c.range_mu);
    CHECK(!base.inconclusive);
    CHECK(base.residual < 1e-2);

    auto pert = rc;
    double m1 = 0.0;
    for (int k = 0; k < rc.N; ++k) m1 = std::max(m1, std::abs(rc.coef(k, 1)));
    for (int k = 0; k < rc.N; ++k) {
      const double t = -rc.T + (2.0 * rc.T / rc.N) * k;
      pert.c[static_cast<size_t>(k) * rc.J + 1] += 0.1 * m1 * std::exp(-t * t);
    }
    const auto broken = horo::range_multiplier_check(pert, 1, c.range_kappa0, c.range_mu);
    CHECK(broken.residual > 10.0 * base.residual);
  }
  SUBCASE("empty band is inconclusive") {
    horo::HorocycleSinogram z(kSpec.grid_T, kSpec.grid_N, 64);
    const auto rc = horo::range_coefficients(z);
    CHECK(horo::range_multiplier_check(rc, 1, c.range_kappa0, c.range_mu).inconclusive);
  }
}

TEST_CASE("support scan") {
  const auto& setup = spectral_setup();
  SUBCASE("bump inside the ball passes all three conditions") {
    const auto f = disk_bump(1.0);
    const auto rep = horo::support_scan(f, 1.0, kSpec, setup, 64);
    CHECK(rep.external_sup < 1e-8);
    CHECK(rep.enclosing_sup < 1e-8);
    CHECK(rep.outside_sup < 1e-3);
    CHECK(rep.cond_external);
    CHECK(rep.cond_enclosing);
    CHECK(rep.cond_outside);
    CHECK(rep.one_sided_implication);
  }
  SUBCASE("off-center phantom breaks the external condition") {
    const auto g = disk_bump(1.0, HypPoint(std::tanh(1.0)));
    const auto rep = horo::support_scan(g, 1.0, kSpec, setup, 64);
    CHECK(rep.external_sup > 1e-3);
    CHECK(!rep.cond_external);
  }
  SUBCASE("zero field scans to zero") {
    geo::DiskField z;
    z.decay = num::Decay::compact(1.0);
    z.f = [](const HypPoint&) { return 0.0; };
    const auto rep = horo::support_scan(z, 1.0, kSpec, setup, 64);
    CHECK(rep.external_sup == 0.0);
    CHECK(rep.enclosing_sup == 0.0);
    CHECK(rep.outside_sup == doctest::Approx(0.0));
  }
}

TEST_CASE("sinogram CSV serialization") {
  horo::HorocycleSinogram psi(2.0, 8, 4);
  psi.at(3, 1) = 0.25;
  std::ostringstream ss;
  horo::write_sinogram_csv(ss, psi);
  const std::string text = ss.str();
  CHECK(text.rfind("t,theta,value\n", 0) == 0);
  CHECK(text.find("0.25") != std::string::npos);
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "igt/euclid_radon.hpp"
#include "oracles.hpp"

using namespace igt;
using geo::EuclidPoint;
using geo::Vec3;
using num::QuadratureSpec;

namespace {

const QuadratureSpec kSpec{};

geo::EuclidField gaussian_field(int dim, Vec3 center = {0, 0, 0}) {
  geo::PhantomSpec ps;
  ps.kind = geo::PhantomSpec::Kind::GaussianOfDistance;
  return geo::phantom_euclid(ps, dim, EuclidPoint{center, dim});
}

geo::DPlane line2(const Vec3& base, double dir_angle) {
  geo::DPlane xi;
  xi.n = 2;
  xi.d = 1;
  xi.frame[0] = Vec3{std::cos(dir_angle), std::sin(dir_angle), 0.0};
  xi.base = EuclidPoint{base, 2};
  return xi;
}

}  // namespace

TEST_CASE("forward transform closed forms") {
  SUBCASE("line integral of the R^2 Gaussian at distance p") {
    const auto f = gaussian_field(2);
    for (double p : {0.0, 0.5, 1.4}) {
      const auto xi = line2(Vec3{p, 0, 0}, 0.5 * num::kPi);
      CHECK(euclid::dplane_forward(f, xi, kSpec) ==
            doctest::Approx(std::sqrt(num::kPi) * std::exp(-p * p)).epsilon(1e-11));
    }
  }
  SUBCASE("2-plane integral of the R^3 Gaussian at distance p") {
    const auto f = gaussian_field(3);
    for (double p : {0.0, 0.7, 1.2}) {
      geo::DPlane xi;
      xi.n = 3;
      xi.d = 2;
      xi.frame = {Vec3{1, 0, 0}, Vec3{0, 1, 0}};
      xi.base = EuclidPoint{{0, 0, p}, 3};
      CHECK(euclid::dplane_forward(f, xi, kSpec) ==
            doctest::Approx(num::kPi * std::exp(-p * p)).epsilon(1e-11));
    }
  }
  SUBCASE("compact bump misses a distant line") {
    geo::PhantomSpec bp;
    bp.kind = geo::PhantomSpec::Kind::CompactBump;
    bp.support_radius = 1.0;
    const auto f = geo::phantom_euclid(bp, 2, EuclidPoint{});
    CHECK(euclid::dplane_forward(f, line2(Vec3{2, 0, 0}, 0.5 * num::kPi), kSpec) == 0.0);
  }
  SUBCASE("decay metadata is required") {
    geo::EuclidField f;
    f.dim = 2;
    f.f = [](const EuclidPoint&) { return 1.0; };
    CHECK_THROWS_AS(euclid::dplane_forward(f, line2(Vec3{0, 0, 0}, 0.0), kSpec),
                    std::invalid_argument);
  }
}

TEST_CASE("dual transform at distance p") {
  SUBCASE("average of a constant is the constant") {
    euclid::SinogramOracle c;
    c.phi = [](const geo::DPlane&) { return 2.75; };
    c.decay = num::Decay::gaussian(1.0);
    c.n = 2;
    c.d = 1;
    CHECK(euclid::dual_at_distance(c, EuclidPoint{}, 0.8, 32, kSpec) == doctest::Approx(2.75));
    c.n = 3;
    CHECK(euclid::dual_at_distance(c, EuclidPoint{{0, 0, 0}, 3}, 0.8, 0, kSpec) ==
          doctest::Approx(2.75));
    c.d = 2;
    CHECK(euclid::dual_at_distance(c, EuclidPoint{{0, 0, 0}, 3}, 0.8, 0, kSpec) ==
          doctest::Approx(2.75));
  }
  SUBCASE("radial field at the origin: dual equals forward, independent of M") {
    const auto f = gaussian_field(2);
    const auto sino = euclid::make_sinogram(f, 1, kSpec);
    const double p = 0.6;
    const double d8 = euclid::dual_at_distance(sino, EuclidPoint{}, p, 8, kSpec);
    const double d64 = euclid::dual_at_distance(sino, EuclidPoint{}, p, 64, kSpec);
    CHECK(std::abs(d8 - d64) < 1e-12);
    CHECK(d8 == doctest::Approx(std::sqrt(num::kPi) * std::exp(-p * p)).epsilon(1e-10));
  }
  SUBCASE("off-center dual matches the rotated-lattice family average") {
    const auto f = gaussian_field(2);
    const auto sino = euclid::make_sinogram(f, 1, kSpec);
    const EuclidPoint x{{1.0, 0.0, 0.0}, 2};
    const double p = 0.5;
    const double mine = euclid::dual_at_distance(sino, x, p, 64, kSpec);
    const double mc = oracle::lattice_circle_average(
        [&](double omega) {
          const Vec3 u{std::cos(omega), std::sin(omega), 0.0};
          const Vec3 foot = geo::add(x.x, geo::scale(u, p));
          return euclid::dplane_forward(f, line2(foot, omega + 0.5 * num::kPi), kSpec);
        },
        10000, 424242);
    CHECK(mine == doctest::Approx(mc).epsilon(1e-8));
  }
}

TEST_CASE("forward and dual transforms are linear") {
  const auto f1 = gaussian_field(2);
  const auto f2 = gaussian_field(2, Vec3{0.4, -0.2, 0});
  geo::EuclidField combo;
  combo.dim = 2;
  combo.decay = num::Decay::gaussian(1.0, 2.5, 0.5);
  combo.f = [&](const EuclidPoint& p) { return 2.0 * f1(p) - 0.5 * f2(p); };
  const auto xi = line2(Vec3{0.3, 0.1, 0}, 1.234);
  CHECK(euclid::dplane_forward(combo, xi, kSpec) ==
        doctest::Approx(2.0 * euclid::dplane_forward(f1, xi, kSpec) -
                        0.5 * euclid::dplane_forward(f2, xi, kSpec))
            .epsilon(1e-12));
}

TEST_CASE("X-ray inversion round trip and translation equivariance") {
  const auto f = gaussian_field(2);
  const auto sino = euclid::make_sinogram(f, 1, kSpec);
  SUBCASE("unit Gaussian at the origin") {
    const auto r = euclid::invert_xray(sino, EuclidPoint{}, kSpec);
    CHECK(std::abs(r.value - 1.0) < 1e-3);
    CHECK(!r.divergence_flag);
  }
  SUBCASE("zero sinogram inverts to zero") {
    euclid::SinogramOracle z;
    z.phi = [](const geo::DPlane&) { return 0.0; };
    z.decay = num::Decay::gaussian(1.0);
    z.n = 2;
    z.d = 1;
    CHECK(std::abs(euclid::invert_xray(z, EuclidPoint{}, kSpec).value) < 1e-14);
  }
  SUBCASE("translated phantom recovers its center amplitude") {
    const Vec3 v{0.8, -0.5, 0};
    const auto g = gaussian_field(2, v);
    const auto sg = euclid::make_sinogram(g, 1, kSpec);
    const auto r = euclid::invert_xray(sg, EuclidPoint{v, 2}, kSpec);
    CHECK(std::abs(r.value - 1.0) < 1e-3);
  }
  SUBCASE("equivariance: inverting the shifted sinogram at x+v matches x") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int i = 0; i < 3; ++i) {
      const Vec3 v{u(rng), u(rng), 0};
      const EuclidPoint x{{0.3, -0.1, 0}, 2};
      const auto g = gaussian_field(2, v);
      const auto sg = euclid::make_sinogram(g, 1, kSpec);
      const double a = euclid::invert_xray(sg, EuclidPoint{geo::add(x.x, v), 2}, kSpec).value;
      const double b = euclid::invert_xray(sino, x, kSpec).value;
      CHECK(std::abs(a - b) < 1e-6);
    }
  }
}

TEST_CASE("d-plane inversion guards and zero case") {
  const auto f = gaussian_field(3);
  const auto sino = euclid::make_sinogram(f, 2, kSpec);
  CHECK_THROWS_AS(
      euclid::invert_dplane(sino, EuclidPoint{{0, 0, 0}, 3},
                            std::numeric_limits<double>::quiet_NaN(), kSpec),
      std::logic_error);
  euclid::SinogramOracle z;
  z.phi = [](const geo::DPlane&) { return 0.0; };
  z.decay = num::Decay::gaussian(1.0);
  z.n = 3;
  z.d = 2;
  CHECK(std::abs(euclid::invert_dplane(z, EuclidPoint{{0, 0, 0}, 3}, 1.0, kSpec).value) < 1e-14);
}

TEST_CASE("duality pairing balances") {
  const auto f = gaussian_field(2);
  auto phi = [](double omega, double q) { return std::exp(-q * q) * (1.0 + 0.3 * std::cos(2.0 * omega)); };
  SUBCASE("Gaussian pair agrees to 1e-6 relative") {
    const auto [lhs, rhs] = euclid::duality_check(f, phi, 6.0, kSpec);
    CHECK(rhs == doctest::Approx(lhs).epsilon(1e-6));
  }
  SUBCASE("zero field gives the zero pair") {
    geo::EuclidField z;
    z.dim = 2;
    z.decay = num::Decay::compact(1.0);
    z.f = [](const EuclidPoint&) { return 0.0; };
    const auto [lhs, rhs] = euclid::duality_check(z, phi, 6.0, kSpec);
    CHECK(lhs == 0.0);
    CHECK(rhs == 0.0);
  }
  SUBCASE("zero plane function gives the zero pair") {
    const auto [lhs, rhs] =
        euclid::duality_check(f, [](double, double) { return 0.0; }, 6.0, kSpec);
    CHECK(lhs == 0.0);
    CHECK(rhs == 0.0);
  }
}

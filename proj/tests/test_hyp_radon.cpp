#include <doctest.h>

#include <cmath>
#include <random>

#include "igt/hyp_radon.hpp"
#include "oracles.hpp"

using namespace igt;
using geo::HypPoint;
using num::QuadratureSpec;

namespace {

const QuadratureSpec kSpec{};

geo::DiskField disk_gaussian(HypPoint center = HypPoint(), double width = 1.0) {
  geo::PhantomSpec ps;
  ps.kind = geo::PhantomSpec::Kind::GaussianOfDistance;
  ps.width = width;
  return geo::phantom_disk(ps, center);
}

geo::H3Field h3_gaussian(double width = 1.0) {
  geo::PhantomSpec ps;
  ps.kind = geo::PhantomSpec::Kind::GaussianOfDistance;
  ps.width = width;
  return geo::phantom_h3(ps, geo::h3_origin());
}

}  // namespace

TEST_CASE("totally geodesic forward transforms") {
  SUBCASE("compact bump misses a distant geodesic") {
    geo::PhantomSpec bp;
    bp.kind = geo::PhantomSpec::Kind::CompactBump;
    bp.support_radius = 1.0;
    const auto f = geo::phantom_disk(bp, HypPoint());
    const auto g = geo::geodesic_at_distance(HypPoint(), 0.3, 2.0);
    CHECK(hyp::tg_forward(f, g, kSpec) == 0.0);
  }
  SUBCASE("radial field over a geodesic through the origin") {
    const auto f = disk_gaussian();
    const auto g = geo::geodesic_from_point_dir(HypPoint(), 0.9);
    const double ref = 2.0 * oracle::integrate([](double r) { return std::exp(-r * r); }, 0.0,
                                               7.0, 1e-13);
    CHECK(hyp::tg_forward(f, g, kSpec) == doctest::Approx(ref).epsilon(1e-11));
  }
  SUBCASE("geodesic at distance p via the hyperbolic Pythagoras oracle") {
    const auto f = disk_gaussian();
    for (double p : {0.4, 1.1}) {
      const auto g = geo::geodesic_at_distance(HypPoint(), 1.7, p);
      const double ref = oracle::integrate(
          [&](double s) {
            const double d = std::acosh(std::cosh(p) * std::cosh(s));
            return std::exp(-d * d);
          },
          -8.0, 8.0, 1e-12);
      CHECK(hyp::tg_forward(f, g, kSpec) == doctest::Approx(ref).epsilon(1e-9));
    }
  }
  SUBCASE("H3 plane transform of a radial field vs the polar oracle") {
    const auto f = h3_gaussian();
    const auto fr = geo::h3_frame(geo::h3_origin());
    for (double p : {0.0, 0.8}) {
      const geo::H3Point foot = geo::h3_exp(geo::h3_origin(), fr[2], p);
      // boosting along e3 keeps e1, e2 tangent at the foot and orthogonal to
      // the radial ray, so they span the plane at distance p
      const auto pf = geo::h3_frame(foot);
      geo::TotallyGeodesicPlane P{foot, pf[0], pf[1]};
      const double val = hyp::tg_forward(f, P, kSpec);
      const double ref = 2.0 * num::kPi *
                         oracle::integrate(
                             [&](double r) {
                               const double d = std::acosh(std::cosh(p) * std::cosh(r));
                               return std::exp(-d * d) * std::sinh(r);
                             },
                             0.0, 8.0, 1e-12);
      CHECK(val == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("hyperbolic dual transforms") {
  SUBCASE("constant sinograms average to the constant") {
    hyp::H2Sinogram c{[](const geo::HypGeodesic&) { return 1.5; }, num::Decay::gaussian(1.0)};
    CHECK(hyp::hyp_dual_at_distance(c, HypPoint(geo::cplx(0.2, 0.4)), 0.7, 32) ==
          doctest::Approx(1.5));
    hyp::H3GeodesicSinogram cg{[](const geo::H3Geodesic&) { return -0.8; },
                               num::Decay::gaussian(1.0)};
    CHECK(hyp::hyp_dual_at_distance(cg, geo::h3_origin(), 0.7) == doctest::Approx(-0.8));
    hyp::H3PlaneSinogram cp{[](const geo::TotallyGeodesicPlane&) { return 0.6; },
                            num::Decay::gaussian(1.0)};
    CHECK(hyp::hyp_dual_at_distance(cp, geo::h3_origin(), 1.2) == doctest::Approx(0.6));
  }
  SUBCASE("radial field at the origin is M-independent") {
    const auto f = disk_gaussian();
    const auto sino = hyp::make_sinogram(f, kSpec);
    const double a = hyp::hyp_dual_at_distance(sino, HypPoint(), 0.9, 8);
    const double b = hyp::hyp_dual_at_distance(sino, HypPoint(), 0.9, 64);
    CHECK(std::abs(a - b) < 1e-12);
  }
  SUBCASE("off-center dual matches the rotated-lattice isotropy average") {
    const auto f = disk_gaussian();
    const auto sino = hyp::make_sinogram(f, kSpec);
    const HypPoint x(geo::cplx(0.35, -0.1));
    const double p = 0.6;
    const double mine = hyp::hyp_dual_at_distance(sino, x, p, 64);
    const double mc = oracle::lattice_circle_average(
        [&](double omega) { return sino.phi(geo::geodesic_at_distance(x, omega, p)); }, 10000,
        777);
    CHECK(mine == doctest::Approx(mc).epsilon(1e-6));
  }
}

TEST_CASE("hyperbolic X-ray inversion") {
  const auto f = disk_gaussian();
  const auto sino = hyp::make_sinogram(f, kSpec);
  SUBCASE("round trip at the origin") {
    const auto r = hyp::invert_hyp_xray(sino, HypPoint(), kSpec);
    CHECK(std::abs(r.value - 1.0) < 5e-3);
    CHECK(!r.divergence_flag);
  }
  SUBCASE("the p -> 0 end stays quiet after d/dp") {
    const auto r = hyp::invert_hyp_xray(sino, HypPoint(geo::cplx(0.2, 0.1)), kSpec);
    CHECK(r.eps_sensitivity < 1e-2 * std::abs(r.value));
  }
  SUBCASE("zero sinogram") {
    hyp::H2Sinogram z{[](const geo::HypGeodesic&) { return 0.0; }, num::Decay::gaussian(1.0)};
    CHECK(std::abs(hyp::invert_hyp_xray(z, HypPoint(), kSpec).value) < 1e-14);
  }
  SUBCASE("translated bump recovers its center value") {
    geo::PhantomSpec bp;
    bp.kind = geo::PhantomSpec::Kind::TranslatedBump;
    bp.support_radius = 0.9;
    bp.amplitude = 1.0;
    const HypPoint c(geo::cplx(0.25, 0.15));
    const auto g = geo::phantom_disk(bp, c);
    const auto sg = hyp::make_sinogram(g, kSpec);
    const auto r = hyp::invert_hyp_xray(sg, c, kSpec);
    CHECK(std::abs(r.value - 1.0) < 5e-3);
  }
  SUBCASE("isometry equivariance") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-0.35, 0.35);
    const HypPoint x(geo::cplx(0.2, -0.2));
    const double base = hyp::invert_hyp_xray(sino, x, kSpec).value;
    for (int i = 0; i < 3; ++i) {
      const geo::Mobius T = geo::Mobius::translate(geo::cplx(u(rng), u(rng)));
      geo::DiskField moved;
      moved.decay = num::Decay::gaussian(1.0, 1.0, 1.2);
      const auto Tinv = T.inverse();
      moved.f = [&f, Tinv](const HypPoint& z) { return f(HypPoint(Tinv.apply(z.z))); };
      const auto sm = hyp::make_sinogram(moved, kSpec);
      const double v = hyp::invert_hyp_xray(sm, HypPoint(T.apply(x.z)), kSpec).value;
      CHECK(std::abs(v - base) < 1e-5);
    }
  }
}

TEST_CASE("H3 inversions") {
  SUBCASE("geodesic X-ray round trip at an off-center point") {
    const auto f = h3_gaussian();
    const auto sino = hyp::make_geodesic_sinogram(f, kSpec);
    const auto x = geo::h3_exp(geo::h3_origin(), geo::h3_frame(geo::h3_origin())[0], 0.7);
    const auto r = hyp::invert_hyp_xray(sino, x, kSpec);
    CHECK(std::abs(r.value - f(x)) < 5e-3);
  }
  SUBCASE("plane-transform inversion needs its constant frozen") {
    const auto f = h3_gaussian();
    const auto sino = hyp::make_plane_sinogram(f, kSpec);
    CHECK_THROWS_AS(hyp::invert_hyp_tg(sino, geo::h3_origin(),
                                       std::numeric_limits<double>::quiet_NaN(), kSpec),
                    std::logic_error);
  }
  SUBCASE("plane-transform constant is phantom independent") {
    const auto f = h3_gaussian();
    const auto sino = hyp::make_plane_sinogram(f, kSpec);
    const double c_a = 1.0 / hyp::invert_hyp_tg(sino, geo::h3_origin(), 1.0, kSpec).value;
    const auto g = h3_gaussian(0.85);
    const auto sg = hyp::make_plane_sinogram(g, kSpec);
    const double c_b = 1.0 / hyp::invert_hyp_tg(sg, geo::h3_origin(), 1.0, kSpec).value;
    CHECK(c_a == doctest::Approx(c_b).epsilon(1e-3));
    // round trip with the freshly derived constant
    const auto r = hyp::invert_hyp_tg(sino, geo::h3_origin(), c_a, kSpec);
    CHECK(std::abs(r.value - 1.0) < 1e-2);
  }
}

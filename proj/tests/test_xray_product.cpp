#include <doctest.h>

#include <cmath>

#include "igt/euclid_radon.hpp"
#include "igt/xray_product.hpp"
#include "oracles.hpp"

using namespace igt;
using geo::FlatGeodesic;
using geo::ProductField;
using geo::ProductPoint;
using num::QuadratureSpec;

namespace {

const QuadratureSpec kSpec{};

ProductField separable(double w1, double w2) {
  geo::PhantomSpec ps;
  ps.kind = geo::PhantomSpec::Kind::SeparableProduct;
  ps.width = w1;
  ps.width2 = w2;
  return geo::phantom_product(ps, ProductPoint{});
}

ProductField product_gaussian(double w = 1.0) {
  geo::PhantomSpec ps;
  ps.kind = geo::PhantomSpec::Kind::GaussianOfDistance;
  ps.width = w;
  return geo::phantom_product(ps, ProductPoint{});
}

}  // namespace

TEST_CASE("product X-ray forward transform") {
  SUBCASE("separable field over a factor-aligned geodesic factorizes") {
    const ProductField f = separable(1.0, 1.3);
    const double p = 0.8;
    const FlatGeodesic g{0.4, 1.9, 0.5 * num::kPi, p};  // factor 2 frozen at distance p
    const double ref = std::exp(-(p / 1.3) * (p / 1.3)) *
                       oracle::integrate([](double s) { return std::exp(-s * s); }, -7.0, 7.0,
                                         1e-13);
    CHECK(prod::product_xray_forward(f, g, kSpec) == doctest::Approx(ref).epsilon(1e-10));
  }
  SUBCASE("compact support disjoint from the geodesic") {
    geo::PhantomSpec bp;
    bp.kind = geo::PhantomSpec::Kind::CompactBump;
    bp.support_radius = 1.0;
    const ProductField f = geo::phantom_product(bp, ProductPoint{});
    CHECK(prod::product_xray_forward(f, FlatGeodesic{0.0, 0.0, 0.3, 2.0}, kSpec) == 0.0);
  }
  SUBCASE("orientation independence") {
    const ProductField f = separable(1.0, 0.9);
    const FlatGeodesic g{0.7, 2.1, 0.6, 1.1};
    geo::ProductField frev;
    frev.decay = f.decay;
    frev.f = f.f;
    // integrate f along gamma(-s): same point set, reversed orientation
    auto rev = [&](double s) { return f(g.at(-s)); };
    const double a = prod::product_xray_forward(f, g, kSpec);
    const double b = num::integrate_line(rev, f.decay, g.p, kSpec);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
  SUBCASE("decay metadata is required") {
    ProductField f;
    f.f = [](const ProductPoint&) { return 1.0; };
    CHECK_THROWS_AS(prod::product_xray_forward(f, FlatGeodesic{}, kSpec),
                    std::invalid_argument);
  }
}

TEST_CASE("omega_p average") {
  SUBCASE("constant functional averages to itself") {
    CHECK(prod::omega_average([](const FlatGeodesic&) { return 4.25; }, 0.7, 8) ==
          doctest::Approx(4.25));
  }
  SUBCASE("K-invariant field is M-independent") {
    const ProductField f = product_gaussian();  // radial in the product distance
    auto fhat = [&](const FlatGeodesic& g) { return prod::product_xray_forward(f, g, kSpec); };
    const double a = prod::omega_average(fhat, 0.6, 8);
    const double b = prod::omega_average(fhat, 0.6, 16);
    CHECK(std::abs(a - b) < 1e-12);
  }
  SUBCASE("p = 0 geodesics pass through the origin") {
    for (double ang : {0.0, 0.7, 2.4}) {
      const geo::ProductPoint z = FlatGeodesic{1.1, 0.3, ang, 0.0}.at(0.0);
      CHECK(geo::product_distance(z, ProductPoint{}) < 1e-14);
    }
  }
  SUBCASE("K-rotation leaves the average unchanged") {
    const ProductField f = separable(1.0, 1.4);
    geo::ProductField fk;
    fk.decay = f.decay;
    const double ka = 0.7, kb = 1.3;
    fk.f = [&f, ka, kb](const ProductPoint& z) {
      ProductPoint w;
      w.z1 = geo::HypPoint(z.z1.z * geo::cplx(std::cos(ka), std::sin(ka)));
      w.z2 = geo::HypPoint(z.z2.z * geo::cplx(std::cos(kb), std::sin(kb)));
      return f(w);
    };
    auto fhat = [&](const FlatGeodesic& g) { return prod::product_xray_forward(f, g, kSpec); };
    auto fkhat = [&](const FlatGeodesic& g) { return prod::product_xray_forward(fk, g, kSpec); };
    const double a = prod::omega_average(fhat, 0.8, 12);
    const double b = prod::omega_average(fkhat, 0.8, 12);
    CHECK(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("rank-two inversion") {
  SUBCASE("separable Gaussian round trip at the origin") {
    const ProductField f = separable(1.0, 1.2);
    const auto r = prod::invert_product_xray(f, kSpec, 16);
    CHECK(std::abs(r.value - 1.0) < 1e-2);
  }
  SUBCASE("symmetry-forced zero") {
    ProductField f;
    f.decay = num::Decay::gaussian(0.8, 1.0);
    f.f = [](const ProductPoint& z) {
      const double d1 = geo::hyp_distance(geo::HypPoint(), z.z1);
      const double d2 = geo::hyp_distance(geo::HypPoint(), z.z2);
      return z.z1.z.real() * std::exp(-d1 * d1 - d2 * d2);
    };
    const auto r = prod::invert_product_xray(f, kSpec, 16);
    CHECK(std::abs(r.value) < 1e-2);
  }
  SUBCASE("the three angular quadratures are converged at M = 16") {
    const ProductField f = separable(1.0, 1.1);
    auto fhat = [&](const FlatGeodesic& g) { return prod::product_xray_forward(f, g, kSpec); };
    for (double p : {0.3, 1.0}) {
      const double a = prod::omega_average(fhat, p, 16);
      const double b = prod::omega_average(fhat, p, 32);
      CHECK(std::abs(a - b) < 1e-6);
    }
  }
  SUBCASE("inversion is stable under angular refinement") {
    const ProductField f = separable(1.0, 1.1);
    const auto a = prod::invert_product_xray(f, kSpec, 16);
    const auto b = prod::invert_product_xray(f, kSpec, 32);
    CHECK(std::abs(a.value - b.value) < 1e-5);
  }
  SUBCASE("bi-radial pipeline degenerates to the flat X-ray inversion") {
    // the omega_p average of a K-invariant field reduces (5.2) to the
    // Euclidean formula on the flat through the origins
    const ProductField f = separable(0.9, 1.25);
    const prod::KAverageTable F(f, 7.0, 0.05, 16);
    geo::EuclidField flat;
    flat.dim = 2;
    flat.decay = num::Decay::gaussian(1.0 / (1.25 * 1.25), 1.0);
    flat.f = [&F](const geo::EuclidPoint& x) { return F(x.x[0], x.x[1]); };
    const auto sino = euclid::make_sinogram(flat, 1, kSpec);
    const double euclid_value = euclid::invert_xray(sino, geo::EuclidPoint{}, kSpec, 32).value;
    const double prod_value = prod::invert_product_xray(f, kSpec, 16).value;
    CHECK(std::abs(prod_value - euclid_value) < 1e-3);
  }
}

#pragma once

// Totally geodesic transforms on H^2 and H^3 with dual transforms at distance
// p and the inversion formulas for (n,d) in {(2,1),(3,1),(3,2)}.

#include <functional>

#include "igt/geometry.hpp"
#include "igt/numerics.hpp"

namespace igt::hyp {

struct H2Sinogram {
  std::function<double(const geo::HypGeodesic&)> phi;
  num::Decay decay;
};

struct H3GeodesicSinogram {
  std::function<double(const geo::H3Geodesic&)> phi;
  num::Decay decay;
};

struct H3PlaneSinogram {
  std::function<double(const geo::TotallyGeodesicPlane&)> phi;
  num::Decay decay;
};

struct PlaneQuad {
  int theta = 32;     // trapezoid samples of the in-plane angle
  int r_panels = 6;   // Gauss panels in the radial direction
};

struct DirectionRule {
  int polar = 12;
  int azimuth = 24;
  int line_circle = 8;
};

double tg_forward(const geo::DiskField& f, const geo::HypGeodesic& g,
                  const num::QuadratureSpec& spec);
double tg_forward(const geo::H3Field& f, const geo::H3Geodesic& g,
                  const num::QuadratureSpec& spec);
// geodesic polar coordinates about the plane's base point, area sinh(r) dr dtheta
double tg_forward(const geo::H3Field& f, const geo::TotallyGeodesicPlane& P,
                  const num::QuadratureSpec& spec, const PlaneQuad& pq = {});

H2Sinogram make_sinogram(const geo::DiskField& f, const num::QuadratureSpec& spec);
H3GeodesicSinogram make_geodesic_sinogram(const geo::H3Field& f, const num::QuadratureSpec& spec);
H3PlaneSinogram make_plane_sinogram(const geo::H3Field& f, const num::QuadratureSpec& spec,
                                    const PlaneQuad& pq = {});

double hyp_dual_at_distance(const H2Sinogram& phi, const geo::HypPoint& x, double p, int M);
double hyp_dual_at_distance(const H3GeodesicSinogram& phi, const geo::H3Point& x, double p,
                            const DirectionRule& dirs = {});
double hyp_dual_at_distance(const H3PlaneSinogram& phi, const geo::H3Point& x, double p,
                            const DirectionRule& dirs = {});

struct InversionResult {
  double value = 0.0;
  double eps_sensitivity = 0.0;
  bool divergence_flag = false;
  double p_truncation = 0.0;
};

// -(1/pi) Int_0^inf d/dp[dual_p(x)] dp/sinh p
InversionResult invert_hyp_xray(const H2Sinogram& phi, const geo::HypPoint& x,
                                const num::QuadratureSpec& spec, int M = 32);
InversionResult invert_hyp_xray(const H3GeodesicSinogram& phi, const geo::H3Point& x,
                                const num::QuadratureSpec& spec, const DirectionRule& dirs = {});

// (n,d) = (3,2):  C2 * [(d/d(r^2))^2 Int_r^inf t^2 dual_{s(t)}(x) dt]_{r=1},
// s(t) = arccosh(t).  Throws when the calibration is absent (NaN).
InversionResult invert_hyp_tg(const H3PlaneSinogram& phi, const geo::H3Point& x, double C2,
                              const num::QuadratureSpec& spec, const DirectionRule& dirs = {});

}  // namespace igt::hyp

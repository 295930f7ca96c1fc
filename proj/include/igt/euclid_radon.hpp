#pragma once

// The d-plane transform on R^n, its dual transform at distance p, the duality
// identity and the inversion formulas, for (n,d) in {(2,1),(3,1),(3,2)}.

#include <functional>
#include <utility>

#include "igt/geometry.hpp"
#include "igt/numerics.hpp"

namespace igt::euclid {

// Lazily evaluated plane transform plus the originating field's decay.
struct SinogramOracle {
  std::function<double(const geo::DPlane&)> phi;
  num::Decay decay;
  int n = 2;
  int d = 1;
};

// Integral of f over the d-plane (Lebesgue measure of the plane).
double dplane_forward(const geo::EuclidField& f, const geo::DPlane& xi,
                      const num::QuadratureSpec& spec);

SinogramOracle make_sinogram(const geo::EuclidField& f, int d, const num::QuadratureSpec& spec);

// Direction-quadrature orders for the sphere averages (Gauss-Legendre in the
// polar angle x uniform azimuth) and the in-plane line-direction circle.
struct DirectionRule {
  int polar = 16;
  int azimuth = 32;
  int line_circle = 6;
};

// Average of phi over all d-planes at distance p from x.  M is the direction
// sample count of the (2,1) circle average; the 3-d cases use `dirs`.
double dual_at_distance(const SinogramOracle& phi, const geo::EuclidPoint& x, double p, int M,
                        const num::QuadratureSpec& spec, const DirectionRule& dirs = {});

struct InversionResult {
  double value = 0.0;
  double eps_sensitivity = 0.0;
  bool divergence_flag = false;
  double p_truncation = 0.0;  // tail cutoff actually used
};

// Eq for d=1: -(1/pi) Int_0^inf d/dp[dual_p(x)] dp/p.
InversionResult invert_xray(const SinogramOracle& phi, const geo::EuclidPoint& x,
                            const num::QuadratureSpec& spec, int M = 32,
                            const DirectionRule& dirs = {});

// (n,d) = (3,2):  c2 * [(d/d(r^2))^2 Int_r^inf p * dual_p(x) dp]_{r=0} with the
// frozen calibrated constant c2.  Throws when the calibration is absent (NaN).
InversionResult invert_dplane(const SinogramOracle& phi, const geo::EuclidPoint& x, double c2,
                              const num::QuadratureSpec& spec, const DirectionRule& dirs = {});

// Line coordinates in R^2: normal angle omega and signed offset q.
geo::DPlane line_from_coords(double omega, double q);

// (Int f * dual0(phi) dx, Int fhat * phi dxi) with the plane measure
// d omega/2pi x dq; phi given in (omega, q) coordinates and symmetric under
// (omega, q) -> (omega + pi, -q).
std::pair<double, double> duality_check(const geo::EuclidField& f,
                                        const std::function<double(double, double)>& phi_oq,
                                        double q_halfwidth, const num::QuadratureSpec& spec,
                                        int M_omega = 64);

}  // namespace igt::euclid

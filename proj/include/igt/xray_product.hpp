#pragma once

// X-ray transform on X = H^2 x H^2 (rank two): forward transform over flat
// geodesics, the omega_p average over Gamma_p, and the rank->1 reduction
// inversion formula recovering f at the origin.

#include <functional>

#include "igt/geometry.hpp"
#include "igt/numerics.hpp"

namespace igt::prod {

double product_xray_forward(const geo::ProductField& f, const geo::FlatGeodesic& g,
                            const num::QuadratureSpec& spec);

// (1/(2pi)^3) Int Int Int phi(gamma_{alpha,beta,phi,p}) d alpha d beta d phi,
// triple trapezoid with M points per angle.
double omega_average(const std::function<double(const geo::FlatGeodesic&)>& phi, double p, int M);

struct InversionResult {
  double value = 0.0;
  double eps_sensitivity = 0.0;
  bool divergence_flag = false;
  double p_truncation = 0.0;
};

// f(o) = -(1/pi) Int_0^inf (d/dp Int_{Gamma_p} fhat d omega_p) dp/p.
// The (alpha,beta) average of f is tabulated once on the flat and reused for
// every p (a Fubini reordering of the same quadratures); M_angle controls the
// angular trapezoids.  To reconstruct at x, pre-compose f with an isometry
// g.o = x and call this on f o g.
InversionResult invert_product_xray(const geo::ProductField& f, const num::QuadratureSpec& spec,
                                    int M_angle = 16);

// K-average of f restricted to the flat through the factor origins:
//   F(u,v) = (1/(2pi)^2) IntInt f(exp1(u X_alpha), exp2(v Y_beta)) d alpha d beta;
// even and smooth in both coordinates.  Exposed for the rank-one reduction
// checks.
class KAverageTable {
 public:
  KAverageTable(const geo::ProductField& f, double extent, double step, int M_angle);
  double operator()(double u, double v) const;
  double extent() const { return U_; }

 private:
  double U_, h_;
  int n_;
  std::vector<double> grid_;  // (n_ x n_) samples on [0,U]^2
};

}  // namespace igt::prod

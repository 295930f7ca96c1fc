#pragma once

// Boundary-parametrized Fourier transform on the disk with inversion,
// Plancherel, the Poisson transform, and the integrable-function tube scan
// (holomorphy and Riemann-Lebesgue decay on the strip |Im lambda| <= 1/2).

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "igt/geometry.hpp"
#include "igt/numerics.hpp"
#include "igt/spectral.hpp"

namespace igt::hf {

using cplx = std::complex<double>;

// ftilde(lambda, b) = Int_X f(x) e^{(-i lambda + 1/2) A(x,b)} dx, 2-d polar
// quadrature over the disk; lambda may sit in the tube |Im lambda| <= 1/2.
cplx hfourier_forward(const geo::DiskField& f, cplx lambda, double theta,
                      const num::QuadratureSpec& spec, int M_angle = 64);

// ftilde on (lambda-grid [0, lambda_max] step dl) x (J boundary angles).
struct SpectralGrid {
  double lambda_max = 8.0;
  double dl = 1.0 / 16.0;
  int L = 129;  // lambda samples
  int J = 64;
  std::vector<cplx> v;  // index il * J + j

  cplx at(int il, int j) const { return v[static_cast<size_t>(il) * J + j]; }
  double lambda_at(int il) const { return il * dl; }
  double theta_at(int j) const { return 2.0 * num::kPi * j / J; }
  // fraction of the spectral mass carried by the top lambda band
  double tail_mass_fraction() const;
};

SpectralGrid forward_grid(const geo::DiskField& f, const num::QuadratureSpec& spec,
                          double lambda_max = 8.0, double dl = 1.0 / 16.0, int J = 64);

struct InvertResult {
  double value = 0.0;
  bool tail_warning = false;
};

// f(x) = (1/w) IntInt ftilde e^{(i lambda + 1/2) A} kappa |c|^{-2} d lambda db
// over lambda in [-lambda_max, lambda_max] (even extension) x B.
InvertResult hfourier_invert(const SpectralGrid& F, const geo::HypPoint& z,
                             const SpectralSetup& setup);

struct PlancherelTriple {
  double lhs = 0.0;   // ||f||^2
  double rhs = 0.0;   // Int_{lambda>0} Int_B |ftilde|^2 kappa |c|^{-2}
  double ratio = 0.0;
};

PlancherelTriple plancherel_check(const geo::DiskField& f, const num::QuadratureSpec& spec,
                                  const SpectralSetup& setup, const SpectralGrid* grid = nullptr);

// Poisson transform Int_B e^{(i lambda + 1/2) A(z,b)} F(b) db.
cplx poisson_transform(const std::function<cplx(double)>& F, cplx lambda,
                       const geo::HypPoint& z, int M = 256);

struct RLRow {
  double xi = 0.0;
  double sup_abs = 0.0;  // sup over the eta x b samples of |ftilde(xi + i eta, b)|
};

std::vector<RLRow> riemann_lebesgue_scan(const geo::DiskField& f, const std::vector<double>& xis,
                                         const std::vector<double>& etas,
                                         const std::vector<double>& thetas,
                                         const num::QuadratureSpec& spec);

// Int_B |ftilde(lambda, b)| db  and  ||f||_1, for the tube bound.
std::pair<double, double> l1_bound_pair(const geo::DiskField& f, cplx lambda,
                                        const num::QuadratureSpec& spec, int J = 32);

// Cauchy-Riemann residual |(d/dxi + i d/deta) ftilde| at a tube point,
// relative to |ftilde|.
double holomorphy_residual(const geo::DiskField& f, cplx lambda, double theta,
                           const num::QuadratureSpec& spec, double h = 1e-3);

// CSV with header lambda,theta,re,im.
void write_spectral_csv(std::ostream& os, const SpectralGrid& F);

// |s(lambda,x) - s(-lambda,x)| / |s| with s = Int_B ftilde(lambda,b)
// e^{(i lambda + 1/2) A(x,b)} db: the Weyl-invariance diagnostic.
double w_invariance_residual(const geo::DiskField& f, double lambda, const geo::HypPoint& x,
                             const num::QuadratureSpec& spec, int J = 32);

}  // namespace igt::hf

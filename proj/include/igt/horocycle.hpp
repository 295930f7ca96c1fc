#pragma once

// Horocycle transform on the Poincare disk: forward and dual transforms, the
// Lambda-inversion, the Plancherel identity, the theta-Fourier range law with
// its unit-modulus multipliers, and the support-theorem harness.

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "igt/geometry.hpp"
#include "igt/numerics.hpp"
#include "igt/spectral.hpp"

namespace igt::horo {

using cplx = std::complex<double>;

// Samples psi(t_k, theta_j) on the t-grid x uniform theta-grid, row-major in t.
struct HorocycleSinogram {
  double T = 24.0;
  int N = 4096;
  int J = 64;
  std::vector<double> v;

  HorocycleSinogram() = default;
  HorocycleSinogram(double T_, int N_, int J_);
  double& at(int k, int j) { return v[static_cast<size_t>(k) * J + j]; }
  double at(int k, int j) const { return v[static_cast<size_t>(k) * J + j]; }
  double t_at(int k) const { return -T + (2.0 * T / N) * k; }
  double theta_at(int j) const { return 2.0 * num::kPi * j / J; }
  double dt() const { return 2.0 * T / N; }
};

// Arc-length integral of f over the horocycle (computed along {y = e^t} in
// the half plane after rotating theta away).  extra_margin widens the
// truncation beyond the decay cutoff; the support scan uses it to measure
// integrals that the metadata already declares zero.
double horocycle_forward(const geo::DiskField& f, const geo::Horocycle& xi,
                         const num::QuadratureSpec& spec, double extra_margin = 0.0);

HorocycleSinogram forward_sinogram(const geo::DiskField& f, const num::QuadratureSpec& spec,
                                   int J = 64, double extra_margin = 0.0);

// dual transform: (1/2pi) Int phi(xi(z,theta)) P(z,e^{i theta}) d theta, the
// Poisson kernel being the Jacobian of moving the K-average to the
// theta-parametrization.
double horocycle_dual(const std::function<double(const geo::Horocycle&)>& phi,
                      const geo::HypPoint& z, int J = 64);

// f = (1/w) (Lambda Lambdabar fhat)-dual with the composite realized as the
// normalized |c|^{-2} multiplier conjugated by e^{t/2}; columns transformed
// once, then evaluated at every requested point.
class LambdaInverter {
 public:
  LambdaInverter(const HorocycleSinogram& psi, const SpectralSetup& setup);
  double operator()(const geo::HypPoint& z) const;

 private:
  int J_;
  std::vector<num::EvenGridFunction> cols_;
};

double lambda_invert(const HorocycleSinogram& psi, const geo::HypPoint& z,
                     const SpectralSetup& setup);

struct PlancherelResult {
  double lhs = 0.0;  // w * ||f||^2
  double rhs = 0.0;  // Int_Xi |Lambda fhat|^2 with d xi = e^{2 rho t} dt dtheta/2pi
  double ratio = 0.0;
};

PlancherelResult plancherel_horocycle(const geo::DiskField& f, const num::QuadratureSpec& spec,
                                      const SpectralSetup& setup, int J = 64);

// theta-DFT per t-row: psi(t,theta) = sum_n psi_n(t) e^{i n theta}.
struct RangeCoefficients {
  double T = 24.0;
  int N = 4096;
  int J = 64;
  std::vector<cplx> c;  // row-major: k*J + jn, jn the DFT bin of n

  cplx coef(int k, int n) const;  // psi_n(t_k), n in (-J/2, J/2]
  std::vector<cplx> column(int n) const;
  double reconstruction_residual(const HorocycleSinogram& psi) const;
};

RangeCoefficients range_coefficients(const HorocycleSinogram& psi);

// shat_n(lambda) = prod_{j=1..|n|} ((2j-1) + i mu lambda) / ((2j-1) - i mu lambda);
// unit modulus on the real axis.
cplx s_hat(int n, double lambda, double mu_scale);

struct RangeCheckResult {
  double residual = 0.0;   // sup-norm over the support band, relative to max
  double band_max = 0.0;   // max |FT(Psi_n)|
  bool inconclusive = false;
};

// Residual of FT(Psi'_n) - shat_n * FT(Psi_n) with Psi_n = e^{kappa0 t} psi_n
// and Psi'_n(t) = Psi_n(-t).
RangeCheckResult range_multiplier_check(const RangeCoefficients& rc, int n, double kappa0,
                                        double mu_scale);

struct SupportScanReport {
  double external_sup = 0.0;    // sup |fhat| over horocycles with t > R + delta
  double enclosing_sup = 0.0;   // sup |fhat| over horocycles with t < -(R + delta)
  double outside_sup = 0.0;     // sup |reconstruction| outside B_{R+delta}
  bool cond_external = false;   // the three equivalent support conditions
  bool cond_enclosing = false;
  bool cond_outside = false;
  bool one_sided_implication = false;  // external vanishing accompanied by enclosing
};

SupportScanReport support_scan(const geo::DiskField& f, double R, const num::QuadratureSpec& spec,
                               const SpectralSetup& setup, int J = 64, double delta = 0.2,
                               double sup_tol = 1e-6, double rec_tol = 1e-3);

// CSV with header t,theta,value, row-major in t.
void write_sinogram_csv(std::ostream& os, const HorocycleSinogram& psi);

}  // namespace igt::horo

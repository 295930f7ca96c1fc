#pragma once

// Spherical function evaluator on the curvature -1 disk and the numerical
// Harish-Chandra c-function oracle built from its large-distance asymptotics.

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "igt/numerics.hpp"

namespace igt::num {

// Quadrature table for the boundary integral (1/2pi) Int e^{(i l + 1/2) A(z,theta)} dtheta
// at z = tanh(t/2).  The Poisson kernel peaks in a window of width ~e^{-t}
// around theta = 0, so panels are placed geometrically from that scale up to
// pi and subdivided enough to resolve phases up to lambda_max.
struct PhiTable {
  double t = 0.0;
  std::vector<double> A;  // Busemann values at the nodes
  std::vector<double> w;  // quadrature weights including the 1/pi of the half-range
};

PhiTable build_phi_table(double t, double lambda_max);

double phi_lambda(double lambda, const PhiTable& tab);          // real spectral parameter
cplx   phi_lambda_c(cplx lambda, const PhiTable& tab);          // tube values

// phi_lambda(t) with an internally cached table per t (lambda_max 40).
double spherical_phi(double lambda, double t);
cplx   spherical_phi_c(cplx lambda, double t);

// |c(lambda)|^{-2} obtained once per lambda by matching
//   e^{t/2} phi_lambda(t) ~ c(lambda) e^{i lambda t} + conj(c(lambda)) e^{-i lambda t}
// in least squares over three fit distances.  Even in lambda, zero at lambda=0.
class CFunction {
 public:
  explicit CFunction(double t_base = 18.0);

  double density_raw(double lambda) const;
  // Relative mismatch of the fitted two-wave model at a distance not used in
  // the fit.
  double fit_residual(double lambda) const;

  // |c|^{-2} sampled on the DFT dual grid of an EvenGridFunction, FFT bin
  // order; cached per (N, T).
  const std::vector<double>& density_bins(int N, double T) const;

  double t_base() const { return t_base_; }

 private:
  double fit_density(double lambda) const;      // the asymptotic-matching fit
  double fit_density_small(double lambda) const;  // |lambda| < 0.05 branch

  double t_base_;
  std::vector<double> fit_ts_;
  mutable std::vector<PhiTable> tables_;       // built lazily at first use
  mutable std::unique_ptr<PhiTable> res_table_;  // residual-check distance
  mutable std::map<double, double> cache_;
  mutable std::map<std::pair<int, int>, std::vector<double>> bin_cache_;
  double lambda_max_bins_ = 0.0;
};

}  // namespace igt::num

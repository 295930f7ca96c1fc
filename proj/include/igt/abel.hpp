#pragma once

// The Abel transform on radial functions of H^2, spherical functions and the
// spherical transform, the L-operator, the convolution identities of the
// transform pair (A, A*), and the inversion f = (1/w) A*(L A f), w = 2.

#include <complex>
#include <functional>
#include <vector>

#include "igt/geometry.hpp"
#include "igt/numerics.hpp"
#include "igt/spectral.hpp"

namespace igt::abel {

using cplx = std::complex<double>;

// K-invariant field as an evaluation oracle on the distance from the origin.
struct RadialField {
  std::function<double(double)> f;
  num::Decay decay;
  double operator()(double r) const { return f(r); }
};

RadialField radial_phantom(const geo::PhantomSpec& ps);
geo::DiskField as_disk_field(const RadialField& f);

// phi_lambda(t) = (1/2pi) Int exp((i lambda + 1/2) A(tanh(t/2), e^{i theta})) d theta.
cplx spherical_function(cplx lambda, double t);

// (A f)(t) = e^{t/2} Int f(r(t,s)) ds with cosh r(t,s) = cosh t + (s^2/2) e^t;
// even in t.
double abel_forward(const RadialField& f, double t, const num::QuadratureSpec& spec);
num::EvenGridFunction abel_forward_grid(const RadialField& f, const num::QuadratureSpec& spec);

// ftilde(lambda) = Int_X f phi_{-lambda} dx = 2pi Int_0^inf f(r) phi_{-lambda}(r) sinh r dr.
cplx spherical_transform(const RadialField& f, cplx lambda, const num::QuadratureSpec& spec);
std::vector<double> spherical_transform_grid(const RadialField& f,
                                             const std::vector<double>& lambdas,
                                             const num::QuadratureSpec& spec);

// L with the kappa-normalized Plancherel density as its multiplier.
num::EvenGridFunction L_apply(const num::EvenGridFunction& g, const SpectralSetup& setup);

// (A* g)(z) = (1/2pi) Int g(-A(z, e^{i theta})) e^{A(z, e^{i theta})/2} d theta
// (the adjoint of A; equal to the +A evaluation for even g).
double abel_dual(const std::function<double(double)>& g, const geo::HypPoint& z, int M = 256);

// f = (1/2) A*(L g); returns the evaluation oracle r -> f(r).
RadialField abel_invert(const num::EvenGridFunction& g, const SpectralSetup& setup, int M = 256);

// brute-force convolution  (f1 x f2)(z) = Int_{H^2} f1(d(o,y)) f2(d(y,z)) dA(y);
// an oracle independent of every transform path.
double radial_convolution(const RadialField& f1, const RadialField& f2, const geo::HypPoint& z,
                          const num::QuadratureSpec& spec, int M_psi = 64);

struct Thm71Report {
  double residual1 = 0.0;  // sup |A*(L phi) - 2 f0| over the probe radii
  double residual2 = 0.0;  // sup |A*(phi * psi) - (1/2) A*(L phi) x A* psi|
};

// phi must be A f0 for the known f0 so that A^{-1} phi is available
// independently; psi is an even grid function (windowed if non-compact).
Thm71Report check_theorem71(const num::EvenGridFunction& phi, const num::EvenGridFunction& psi,
                            const RadialField& f0, const num::Decay& f0_decay_for_conv,
                            const std::vector<double>& probe_radii, const SpectralSetup& setup);

}  // namespace igt::abel

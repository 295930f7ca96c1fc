#include "igt/horocycle.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace igt::horo {

using geo::Horocycle;
using geo::HypPoint;
using num::kPi;
using num::QuadratureSpec;

HorocycleSinogram::HorocycleSinogram(double T_, int N_, int J_)
    : T(T_), N(N_), J(J_), v(static_cast<size_t>(N_) * J_, 0.0) {}

double horocycle_forward(const geo::DiskField& f, const Horocycle& xi,
                         const QuadratureSpec& spec, double extra_margin) {
  if (!f.decay.present()) throw std::invalid_argument("horocycle_forward: decay metadata missing");
  const double rc = f.decay.cutoff_radius() + extra_margin;
  if (std::abs(xi.t) >= rc) return 0.0;
  // arc length s gives cosh d(o, point(s)) = cosh t + (s^2/2) e^t; integrate
  // in u = s e^{t/2}/sqrt(2) so the range stays uniformly short for t < 0
  const double root = std::sqrt(2.0) * std::exp(-0.5 * xi.t);
  const double umax = std::sqrt(std::max(std::cosh(rc) - std::cosh(xi.t), 0.0));
  auto g = [&](double u) {
    return f(geo::horocycle_point(xi, root * u)) + f(geo::horocycle_point(xi, -root * u));
  };
  const int panels = std::max(spec.panel_count, static_cast<int>(std::ceil(umax / 2.0)));
  return root * num::panel_gauss(g, 0.0, umax, spec.gauss_order, panels);
}

HorocycleSinogram forward_sinogram(const geo::DiskField& f, const QuadratureSpec& spec, int J,
                                   double extra_margin) {
  HorocycleSinogram out(spec.grid_T, spec.grid_N, J);
  const double rc = f.decay.cutoff_radius() + extra_margin;
  for (int k = 0; k < out.N; ++k) {
    const double t = out.t_at(k);
    if (std::abs(t) >= rc) continue;
    for (int j = 0; j < J; ++j)
      out.at(k, j) = horocycle_forward(f, Horocycle{t, out.theta_at(j)}, spec, extra_margin);
  }
  return out;
}

double horocycle_dual(const std::function<double(const Horocycle&)>& phi, const HypPoint& z,
                      int J) {
  auto g = [&](double theta) {
    const double t = geo::busemann(z, theta);
    return phi(Horocycle{t, theta}) * geo::poisson_kernel(z, theta);
  };
  return num::integrate_circle(g, J);
}

namespace {

// Trigonometric upsampling of the band-limited theta-dependence: the dual
// integrand sharpens like the Poisson kernel at the evaluation point, so the
// theta trapezoid needs many more nodes than the sinogram carries columns.
HorocycleSinogram upsample_theta(const HorocycleSinogram& psi, int J_up) {
  if (J_up <= psi.J) return psi;
  HorocycleSinogram out(psi.T, psi.N, J_up);
  std::vector<cplx> row(psi.J), wide(static_cast<size_t>(J_up));
  for (int k = 0; k < psi.N; ++k) {
    bool nonzero = false;
    for (int j = 0; j < psi.J; ++j) {
      row[j] = psi.at(k, j);
      nonzero = nonzero || (row[j] != 0.0);
    }
    if (!nonzero) continue;
    num::fft_inplace(row, false);
    std::fill(wide.begin(), wide.end(), cplx(0.0, 0.0));
    const int half = psi.J / 2;
    for (int n = 0; n < half; ++n) wide[n] = row[n];
    for (int n = 1; n <= half; ++n) wide[J_up - n] = row[psi.J - n];
    num::fft_inplace(wide, true);
    for (int j = 0; j < J_up; ++j) out.at(k, j) = wide[j].real() * (double(J_up) / psi.J);
  }
  return out;
}

}  // namespace

LambdaInverter::LambdaInverter(const HorocycleSinogram& psi_in, const SpectralSetup& setup)
    : J_(0) {
  setup.require_frozen();
  if (psi_in.N != setup.spec.grid_N || psi_in.T != setup.spec.grid_T)
    throw std::invalid_argument("LambdaInverter: sinogram grid does not match the configured t-grid");
  const HorocycleSinogram psi = upsample_theta(psi_in, 512);
  J_ = psi.J;
  const num::Multiplier mu = setup.mu_multiplier();
  cols_.reserve(J_);
  for (int j = 0; j < J_; ++j) {
    num::EvenGridFunction u(psi.T, psi.N, false);
    for (int k = 0; k < psi.N; ++k) u.v[k] = std::exp(0.5 * u.t_at(k)) * psi.at(k, j);
    num::EvenGridFunction g = num::apply_multiplier(u, mu);
    for (int k = 0; k < psi.N; ++k) g.v[k] *= std::exp(-0.5 * g.t_at(k));
    cols_.push_back(std::move(g));
  }
}

double LambdaInverter::operator()(const HypPoint& z) const {
  double acc = 0.0;
  for (int j = 0; j < J_; ++j) {
    const double theta = 2.0 * kPi * j / J_;
    const double A = geo::busemann(z, theta);
    acc += cols_[j].interp(A) * std::exp(A);  // Poisson kernel weight
  }
  return 0.5 * acc / J_;  // 1/w, w = 2
}

double lambda_invert(const HorocycleSinogram& psi, const HypPoint& z, const SpectralSetup& setup) {
  return LambdaInverter(psi, setup)(z);
}

PlancherelResult plancherel_horocycle(const geo::DiskField& f, const QuadratureSpec& spec,
                                      const SpectralSetup& setup, int J) {
  setup.require_frozen();
  const double rc = f.decay.cutoff_radius();
  const double l2 =
      geo::disk_integral([&](const HypPoint& z) { const double y = f(z); return y * y; }, rc,
                         spec, std::max(J, 64));

  const HorocycleSinogram psi = forward_sinogram(f, spec, J);
  const num::Multiplier lam = setup.sqrt_mu_multiplier();
  double rhs = 0.0;
  for (int j = 0; j < J; ++j) {
    num::EvenGridFunction u(psi.T, psi.N, false);
    for (int k = 0; k < psi.N; ++k) u.v[k] = std::exp(0.5 * u.t_at(k)) * psi.at(k, j);
    const num::EvenGridFunction v = num::apply_multiplier(u, lam);
    // |Lambda psi|^2 e^{2 rho t} dt == v(t)^2 dt
    double col = 0.0;
    for (double x : v.v) col += x * x;
    rhs += col * v.dt();
  }
  rhs /= J;

  PlancherelResult out;
  out.lhs = 2.0 * l2;
  out.rhs = rhs;
  out.ratio = (rhs != 0.0) ? out.lhs / rhs : 0.0;
  return out;
}

RangeCoefficients range_coefficients(const HorocycleSinogram& psi) {
  RangeCoefficients rc;
  rc.T = psi.T;
  rc.N = psi.N;
  rc.J = psi.J;
  rc.c.assign(static_cast<size_t>(psi.N) * psi.J, 0.0);
  std::vector<cplx> row(psi.J);
  for (int k = 0; k < psi.N; ++k) {
    bool nonzero = false;
    for (int j = 0; j < psi.J; ++j) {
      row[j] = psi.at(k, j);
      nonzero = nonzero || (psi.at(k, j) != 0.0);
    }
    if (!nonzero) continue;
    num::fft_inplace(row, false);
    for (int j = 0; j < psi.J; ++j) rc.c[static_cast<size_t>(k) * psi.J + j] = row[j] / double(psi.J);
  }
  return rc;
}

cplx RangeCoefficients::coef(int k, int n) const {
  const int jn = ((n % J) + J) % J;
  return c[static_cast<size_t>(k) * J + jn];
}

std::vector<cplx> RangeCoefficients::column(int n) const {
  std::vector<cplx> out(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) out[k] = coef(k, n);
  return out;
}

double RangeCoefficients::reconstruction_residual(const HorocycleSinogram& psi) const {
  double worst = 0.0, scale = 0.0;
  for (int k = 0; k < N; ++k) {
    for (int j = 0; j < J; ++j) {
      cplx acc = 0.0;
      for (int n = 0; n < J; ++n) {
        const double ang = 2.0 * kPi * n * j / J;
        acc += c[static_cast<size_t>(k) * J + n] * cplx(std::cos(ang), std::sin(ang));
      }
      worst = std::max(worst, std::abs(acc - psi.at(k, j)));
      scale = std::max(scale, std::abs(psi.at(k, j)));
    }
  }
  return (scale > 0) ? worst / scale : worst;
}

cplx s_hat(int n, double lambda, double mu_scale) {
  cplx out(1.0, 0.0);
  const int an = std::abs(n);
  for (int j = 1; j <= an; ++j) {
    const double k = 2.0 * j - 1.0;
    out *= cplx(k, mu_scale * lambda) / cplx(k, -mu_scale * lambda);
  }
  return out;
}

RangeCheckResult range_multiplier_check(const RangeCoefficients& rc, int n, double kappa0,
                                        double mu_scale) {
  if (n == 0) throw std::invalid_argument("range_multiplier_check: n must be nonzero");
  RangeCheckResult out;
  const int N = rc.N;
  const std::vector<cplx> psi_n = rc.column(n);
  std::vector<cplx> Psi(N), Psir(N);
  for (int k = 0; k < N; ++k) {
    const double t = -rc.T + (2.0 * rc.T / N) * k;
    Psi[k] = psi_n[k] * std::exp(kappa0 * t);
  }
  for (int k = 0; k < N; ++k) Psir[k] = Psi[(N - k) % N];  // t -> -t on the grid
  num::fft_inplace(Psi, false);
  num::fft_inplace(Psir, false);

  double maxmag = 0.0;
  for (const cplx& z : Psi) maxmag = std::max(maxmag, std::abs(z));
  out.band_max = maxmag;
  if (maxmag <= 0.0) {
    out.inconclusive = true;
    return out;
  }
  const double band = 1e-8 * maxmag;
  double worst = 0.0;
  int in_band = 0;
  for (int j = 0; j < N; ++j) {
    if (std::abs(Psi[j]) < band) continue;
    ++in_band;
    const double lambda = num::Multiplier::bin_lambda(j, N, rc.T);
    // continuous-transform phases e^{i lambda T} restored on both sides
    const cplx phase(std::cos(lambda * rc.T), std::sin(lambda * rc.T));
    const cplx lhs = phase * Psir[j];
    const cplx rhs = s_hat(n, lambda, mu_scale) * phase * Psi[j];
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  out.residual = worst / maxmag;
  out.inconclusive = (in_band == 0);
  return out;
}

SupportScanReport support_scan(const geo::DiskField& f, double R, const QuadratureSpec& spec,
                               const SpectralSetup& setup, int J, double delta, double sup_tol,
                               double rec_tol) {
  SupportScanReport rep;
  // Horocycle integrals are measured over a widened truncation so that
  // vanishing outside the ball is observed, not assumed from the metadata.
  const HorocycleSinogram psi = forward_sinogram(f, spec, J, 1.0);
  const double t_hi = f.decay.cutoff_radius() + 0.9;
  for (int k = 0; k < psi.N; ++k) {
    const double t = psi.t_at(k);
    if (std::abs(t) > t_hi) continue;
    for (int j = 0; j < J; ++j) {
      const double val = std::abs(psi.at(k, j));
      if (t > R + delta) rep.external_sup = std::max(rep.external_sup, val);
      if (t < -(R + delta)) rep.enclosing_sup = std::max(rep.enclosing_sup, val);
    }
  }

  const LambdaInverter inv(psi, setup);
  for (int i = 0; i < 8; ++i) {
    const double r = R + delta + 0.05 + (0.8 * i) / 7.0;
    for (int j = 0; j < 12; ++j) {
      const double ang = 2.0 * kPi * j / 12.0;
      const HypPoint z(std::tanh(0.5 * r) * cplx(std::cos(ang), std::sin(ang)));
      rep.outside_sup = std::max(rep.outside_sup, std::abs(inv(z)));
    }
  }

  rep.cond_external = rep.external_sup <= sup_tol;
  rep.cond_enclosing = rep.enclosing_sup <= sup_tol;
  rep.cond_outside = rep.outside_sup <= rec_tol;
  rep.one_sided_implication = !rep.cond_external || rep.cond_enclosing;
  return rep;
}

void write_sinogram_csv(std::ostream& os, const HorocycleSinogram& psi) {
  os << "t,theta,value\n";
  for (int k = 0; k < psi.N; ++k)
    for (int j = 0; j < psi.J; ++j)
      os << psi.t_at(k) << ',' << psi.theta_at(j) << ',' << psi.at(k, j) << '\n';
}

}  // namespace igt::horo

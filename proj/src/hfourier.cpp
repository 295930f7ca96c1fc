#include "igt/hfourier.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace igt::hf {

using geo::HypPoint;
using num::kPi;
using num::QuadratureSpec;

cplx hfourier_forward(const geo::DiskField& f, cplx lambda, double theta,
                      const QuadratureSpec& spec, int M_angle) {
  if (!f.decay.present()) throw std::invalid_argument("hfourier_forward: decay metadata missing");
  const double rc = std::min(f.decay.cutoff_radius(), spec.line_cutoff);
  const cplx expo = cplx(0.0, -1.0) * lambda + 0.5;
  const num::GaussRule& rule = num::gauss_rule(spec.gauss_order);
  const double h = rc / spec.panel_count;
  cplx acc = 0.0;
  for (int p = 0; p < spec.panel_count; ++p) {
    const double mid = (p + 0.5) * h;
    for (size_t i = 0; i < rule.x.size(); ++i) {
      const double r = mid + 0.5 * h * rule.x[i];
      const double rad = std::tanh(0.5 * r);
      cplx ring = 0.0;
      for (int j = 0; j < M_angle; ++j) {
        const double psi = 2.0 * kPi * j / M_angle;
        const HypPoint z(rad * cplx(std::cos(psi), std::sin(psi)));
        const double fv = f(z);
        if (fv == 0.0) continue;
        ring += fv * std::exp(expo * geo::busemann(z, theta));
      }
      acc += 0.5 * h * rule.w[i] * (ring / static_cast<double>(M_angle)) * 2.0 * kPi *
             std::sinh(r);
    }
  }
  return acc;
}

double SpectralGrid::tail_mass_fraction() const {
  double total = 0.0, top = 0.0;
  for (int il = 0; il < L; ++il)
    for (int j = 0; j < J; ++j) {
      const double m = std::norm(at(il, j));
      total += m;
      if (il == L - 1) top += m;
    }
  return (total > 0) ? top / total : 0.0;
}

SpectralGrid forward_grid(const geo::DiskField& f, const QuadratureSpec& spec, double lambda_max,
                          double dl, int J) {
  if (!f.decay.present()) throw std::invalid_argument("forward_grid: decay metadata missing");
  SpectralGrid F;
  F.lambda_max = lambda_max;
  F.dl = dl;
  F.J = J;
  F.L = static_cast<int>(std::lround(lambda_max / dl)) + 1;
  F.v.assign(static_cast<size_t>(F.L) * J, cplx(0.0, 0.0));

  const double rc = std::min(f.decay.cutoff_radius(), spec.line_cutoff);
  const num::GaussRule& rule = num::gauss_rule(spec.gauss_order);
  const double h = rc / spec.panel_count;
  // for each disk node, accumulate every (lambda, b) cell by advancing the
  // phase e^{-i dl A} once per lambda step
  for (int p = 0; p < spec.panel_count; ++p) {
    const double mid = (p + 0.5) * h;
    for (size_t i = 0; i < rule.x.size(); ++i) {
      const double r = mid + 0.5 * h * rule.x[i];
      const double rad = std::tanh(0.5 * r);
      const double wt = 0.5 * h * rule.w[i] * 2.0 * kPi * std::sinh(r);
      const int M_angle = 64;
      for (int m = 0; m < M_angle; ++m) {
        const double psi = 2.0 * kPi * m / M_angle;
        const HypPoint z(rad * cplx(std::cos(psi), std::sin(psi)));
        const double fv = f(z);
        if (fv == 0.0) continue;
        const double base = wt * fv / M_angle;
        for (int j = 0; j < J; ++j) {
          const double A = geo::busemann(z, F.theta_at(j));
          const double amp = base * std::exp(0.5 * A);
          const cplx step(std::cos(dl * A), -std::sin(dl * A));
          cplx ph(amp, 0.0);
          for (int il = 0; il < F.L; ++il) {
            F.v[static_cast<size_t>(il) * J + j] += ph;
            ph *= step;
          }
        }
      }
    }
  }
  return F;
}

InvertResult hfourier_invert(const SpectralGrid& F, const HypPoint& z, const SpectralSetup& setup) {
  setup.require_frozen();
  InvertResult out;
  out.tail_warning = F.tail_mass_fraction() > 1e-6;

  double acc = 0.0;
  for (int j = 0; j < F.J; ++j) {
    const double A = geo::busemann(z, F.theta_at(j));
    const double eA = std::exp(0.5 * A);
    for (int il = 0; il < F.L; ++il) {
      const double lambda = F.lambda_at(il);
      const double w = (il == 0 || il == F.L - 1) ? 0.5 * F.dl : F.dl;
      const cplx kern = eA * cplx(std::cos(lambda * A), std::sin(lambda * A));
      // lambda and -lambda contribute conjugate terms for real f
      acc += 2.0 * (F.at(il, j) * kern).real() * w * setup.kappa * setup.density_raw(lambda);
    }
  }
  out.value = 0.5 * acc / F.J;  // 1/w and the normalized db
  return out;
}

PlancherelTriple plancherel_check(const geo::DiskField& f, const QuadratureSpec& spec,
                                  const SpectralSetup& setup, const SpectralGrid* grid) {
  setup.require_frozen();
  SpectralGrid local;
  if (!grid) {
    local = forward_grid(f, spec);
    grid = &local;
  }
  PlancherelTriple out;
  const double rc = f.decay.cutoff_radius();
  out.lhs = geo::disk_integral([&](const HypPoint& z) { const double y = f(z); return y * y; },
                               rc, spec, 64);
  double acc = 0.0;
  for (int il = 0; il < grid->L; ++il) {
    const double lambda = grid->lambda_at(il);
    const double w = (il == 0 || il == grid->L - 1) ? 0.5 * grid->dl : grid->dl;
    double ring = 0.0;
    for (int j = 0; j < grid->J; ++j) ring += std::norm(grid->at(il, j));
    acc += w * setup.kappa * setup.density_raw(lambda) * ring / grid->J;
  }
  out.rhs = acc;
  out.ratio = (out.rhs != 0.0) ? out.lhs / out.rhs : 0.0;
  return out;
}

cplx poisson_transform(const std::function<cplx(double)>& F, cplx lambda, const HypPoint& z,
                       int M) {
  const cplx expo = cplx(0.0, 1.0) * lambda + 0.5;
  return num::integrate_circle_c(
      [&](double theta) { return F(theta) * std::exp(expo * geo::busemann(z, theta)); }, M);
}

std::vector<RLRow> riemann_lebesgue_scan(const geo::DiskField& f, const std::vector<double>& xis,
                                         const std::vector<double>& etas,
                                         const std::vector<double>& thetas,
                                         const QuadratureSpec& spec) {
  std::vector<RLRow> rows;
  rows.reserve(xis.size());
  for (double xi : xis) {
    RLRow row;
    row.xi = xi;
    for (double eta : etas)
      for (double th : thetas)
        row.sup_abs =
            std::max(row.sup_abs, std::abs(hfourier_forward(f, cplx(xi, eta), th, spec, 256)));
    rows.push_back(row);
  }
  return rows;
}

std::pair<double, double> l1_bound_pair(const geo::DiskField& f, cplx lambda,
                                        const QuadratureSpec& spec, int J) {
  double l1b = 0.0;
  for (int j = 0; j < J; ++j)
    l1b += std::abs(hfourier_forward(f, lambda, 2.0 * kPi * j / J, spec));
  l1b /= J;
  const double rc = f.decay.cutoff_radius();
  const double fl1 =
      geo::disk_integral([&](const HypPoint& z) { return std::abs(f(z)); }, rc, spec, 64);
  return {l1b, fl1};
}

double holomorphy_residual(const geo::DiskField& f, cplx lambda, double theta,
                           const QuadratureSpec& spec, double h) {
  auto F = [&](cplx l) { return hfourier_forward(f, l, theta, spec); };
  const cplx dxi = (F(lambda + h) - F(lambda - h)) / (2.0 * h);
  const cplx deta = (F(lambda + cplx(0.0, h)) - F(lambda - cplx(0.0, h))) / (2.0 * h);
  const cplx cr = dxi + cplx(0.0, 1.0) * deta;
  const double scale = std::max(std::abs(F(lambda)), 1e-300);
  return 0.5 * std::abs(cr) / scale;  // d/d(conj lambda) = (dxi + i deta)/2
}

void write_spectral_csv(std::ostream& os, const SpectralGrid& F) {
  os << "lambda,theta,re,im\n";
  for (int il = 0; il < F.L; ++il)
    for (int j = 0; j < F.J; ++j)
      os << F.lambda_at(il) << ',' << F.theta_at(j) << ',' << F.at(il, j).real() << ','
         << F.at(il, j).imag() << '\n';
}

double w_invariance_residual(const geo::DiskField& f, double lambda, const HypPoint& x,
                             const QuadratureSpec& spec, int J) {
  auto s_at = [&](double l) {
    cplx acc = 0.0;
    for (int j = 0; j < J; ++j) {
      const double th = 2.0 * kPi * j / J;
      const double A = geo::busemann(x, th);
      acc += hfourier_forward(f, cplx(l, 0.0), th, spec) *
             std::exp(cplx(0.5, l) * A);
    }
    return acc / static_cast<double>(J);
  };
  const cplx sp = s_at(lambda), sm = s_at(-lambda);
  return std::abs(sp - sm) / std::max(std::abs(sp), 1e-300);
}

}  // namespace igt::hf

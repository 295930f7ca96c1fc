#include "igt/abel.hpp"

#include <cmath>
#include <stdexcept>

#include "igt/cfunction.hpp"

namespace igt::abel {

using geo::HypPoint;
using num::kPi;
using num::QuadratureSpec;

RadialField radial_phantom(const geo::PhantomSpec& ps) {
  ps.validate();
  RadialField out;
  out.decay = geo::phantom_decay(ps, 0.0);
  out.f = [ps](double r) { return geo::phantom_profile(ps, r); };
  return out;
}

geo::DiskField as_disk_field(const RadialField& f) {
  geo::DiskField out;
  out.decay = f.decay;
  out.f = [f](const HypPoint& z) { return f(geo::hyp_distance(HypPoint(), z)); };
  return out;
}

cplx spherical_function(cplx lambda, double t) { return num::spherical_phi_c(lambda, t); }

double abel_forward(const RadialField& f, double t, const QuadratureSpec& spec) {
  if (!f.decay.present()) throw std::invalid_argument("abel_forward: decay metadata missing");
  const double rc = f.decay.cutoff_radius();
  const double at = std::abs(t);
  if (at >= rc) return 0.0;
  // arc length s and cosh r = cosh t + (s^2/2) e^t; substituting
  // u = s e^{t/2}/sqrt(2) gives  Af(t) = 2 sqrt(2) Int_0^umax f(r(u)) du with
  // cosh r = cosh t + u^2, manifestly even in t and uniformly short-ranged.
  const double cht = std::cosh(t);
  const double umax = std::sqrt(std::max(std::cosh(rc) - cht, 0.0));
  auto g = [&](double u) { return f(std::acosh(std::max(1.0, cht + u * u))); };
  const int panels = std::max(spec.panel_count, static_cast<int>(std::ceil(umax / 2.0)));
  return 2.0 * std::sqrt(2.0) * num::panel_gauss(g, 0.0, umax, spec.gauss_order, panels);
}

num::EvenGridFunction abel_forward_grid(const RadialField& f, const QuadratureSpec& spec) {
  num::EvenGridFunction g(spec.grid_T, spec.grid_N, true);
  const double rc = f.decay.cutoff_radius();
  for (int k = 0; k < spec.grid_N; ++k) {
    const double t = g.t_at(k);
    g.v[k] = (std::abs(t) < rc) ? abel_forward(f, t, spec) : 0.0;
  }
  g.check_evenness(1e-8);
  return g;
}

cplx spherical_transform(const RadialField& f, cplx lambda, const QuadratureSpec& spec) {
  if (!f.decay.present())
    throw std::invalid_argument("spherical_transform: decay metadata missing");
  const double rc = std::min(f.decay.cutoff_radius(), spec.line_cutoff);
  const num::GaussRule& rule = num::gauss_rule(spec.gauss_order);
  const int panels = spec.panel_count;
  const double h = rc / panels;
  cplx acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (size_t i = 0; i < rule.x.size(); ++i) {
      const double r = mid + 0.5 * h * rule.x[i];
      acc += 0.5 * h * rule.w[i] * f(r) * num::spherical_phi_c(-lambda, r) * std::sinh(r);
    }
  }
  return 2.0 * kPi * acc;
}

std::vector<double> spherical_transform_grid(const RadialField& f,
                                             const std::vector<double>& lambdas,
                                             const QuadratureSpec& spec) {
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) out.push_back(spherical_transform(f, cplx(l, 0.0), spec).real());
  return out;
}

num::EvenGridFunction L_apply(const num::EvenGridFunction& g, const SpectralSetup& setup) {
  return num::apply_multiplier(g, setup.mu_multiplier());
}

double abel_dual(const std::function<double(double)>& g, const HypPoint& z, int M) {
  auto integrand = [&](double theta) {
    const double A = geo::busemann(z, theta);
    return g(-A) * std::exp(0.5 * A);
  };
  return num::integrate_circle(integrand, M);
}

RadialField abel_invert(const num::EvenGridFunction& g, const SpectralSetup& setup, int M) {
  setup.require_frozen();
  auto Lg = std::make_shared<num::EvenGridFunction>(L_apply(g, setup));
  RadialField out;
  out.f = [Lg, M](double r) {
    const HypPoint z(std::tanh(0.5 * r));
    return 0.5 * abel_dual([&](double t) { return Lg->interp(t); }, z, M);
  };
  return out;
}

double radial_convolution(const RadialField& f1, const RadialField& f2, const HypPoint& z,
                          const QuadratureSpec& spec, int M_psi) {
  if (!f1.decay.present() || !f2.decay.present())
    throw std::invalid_argument("radial_convolution: decay metadata missing");
  const double rc = std::min(f1.decay.cutoff_radius(), spec.line_cutoff);
  auto radial = [&](double r) {
    const double rabs = std::tanh(0.5 * r);
    auto ang = [&](double psi) {
      const HypPoint y(rabs * cplx(std::cos(psi), std::sin(psi)));
      return f2(geo::hyp_distance(y, z));
    };
    return f1(r) * num::integrate_circle(ang, M_psi) * 2.0 * kPi * std::sinh(r);
  };
  return num::panel_gauss(radial, 0.0, rc, spec.gauss_order, spec.panel_count);
}

Thm71Report check_theorem71(const num::EvenGridFunction& phi, const num::EvenGridFunction& psi,
                            const RadialField& f0, const num::Decay& f0_decay_for_conv,
                            const std::vector<double>& probe_radii, const SpectralSetup& setup) {
  setup.require_frozen();
  Thm71Report rep;

  auto Lphi = std::make_shared<num::EvenGridFunction>(L_apply(phi, setup));
  auto astar_Lphi = [Lphi](double r) {
    return abel_dual([&](double t) { return Lphi->interp(t); }, HypPoint(std::tanh(0.5 * r)));
  };
  for (double r : probe_radii)
    rep.residual1 = std::max(rep.residual1, std::abs(astar_Lphi(r) - 2.0 * f0(r)));

  // Eq: A*(phi * psi) = (1/2) A*(L phi) x A* psi
  const num::EvenGridFunction conv = num::grid_convolution(phi, psi);
  RadialField lhs_left{astar_Lphi, f0_decay_for_conv};
  RadialField astar_psi{[&psi](double r) {
                          return abel_dual([&](double t) { return psi.interp(t); },
                                           HypPoint(std::tanh(0.5 * r)));
                        },
                        num::Decay::gaussian(1e-4, 1.0)};
  for (double r : probe_radii) {
    const HypPoint z(std::tanh(0.5 * r));
    const double lhs = abel_dual([&](double t) { return conv.interp(t); }, z);
    const double rhs = 0.5 * radial_convolution(lhs_left, astar_psi, z, setup.spec);
    rep.residual2 = std::max(rep.residual2, std::abs(lhs - rhs));
  }
  return rep;
}

}  // namespace igt::abel

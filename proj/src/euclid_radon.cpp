#include "igt/euclid_radon.hpp"

#include <cmath>
#include <stdexcept>

namespace igt::euclid {

using geo::DPlane;
using geo::EuclidPoint;
using geo::Vec3;
using num::kPi;
using num::QuadratureSpec;

namespace {

// Re-center the plane at its point closest to the origin; tightens every
// decay-driven truncation below.
DPlane recentered(const DPlane& xi) {
  DPlane out = xi;
  Vec3 shift{0, 0, 0};
  for (int i = 0; i < xi.d; ++i)
    shift = geo::add(shift, geo::scale(xi.frame[i], -geo::dot(xi.base.x, xi.frame[i])));
  out.base.x = geo::add(xi.base.x, shift);
  return out;
}

}  // namespace

double dplane_forward(const geo::EuclidField& f, const geo::DPlane& xi_in,
                      const QuadratureSpec& spec) {
  if (!f.decay.present()) throw std::invalid_argument("dplane_forward: decay metadata missing");
  const DPlane xi = recentered(xi_in);
  const double base_dist = geo::norm(xi.base.x);

  if (xi.d == 1) {
    auto g = [&](double s) { return f(xi.at(s)); };
    return num::integrate_line(g, f.decay, base_dist, spec);
  }

  const double L = num::line_half_length(f.decay, base_dist, spec);
  auto outer = [&](double u) {
    const double od = std::sqrt(base_dist * base_dist + u * u);
    auto inner = [&](double s) { return f(xi.at(s, u)); };
    return num::integrate_line(inner, f.decay, od, spec);
  };
  return num::panel_gauss(outer, -L, L, spec.gauss_order, spec.panel_count);
}

SinogramOracle make_sinogram(const geo::EuclidField& f, int d, const QuadratureSpec& spec) {
  SinogramOracle out;
  out.decay = f.decay;
  out.n = f.dim;
  out.d = d;
  out.phi = [f, spec](const geo::DPlane& xi) { return dplane_forward(f, xi, spec); };
  return out;
}

namespace {

std::array<Vec3, 2> orthocomplement(const Vec3& u) {
  // two unit vectors spanning u-perp in R^3
  Vec3 a = (std::abs(u[0]) < 0.9) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  a = geo::sub(a, geo::scale(u, geo::dot(a, u)));
  a = geo::scale(a, 1.0 / geo::norm(a));
  const Vec3 b{u[1] * a[2] - u[2] * a[1], u[2] * a[0] - u[0] * a[2], u[0] * a[1] - u[1] * a[0]};
  return {a, b};
}

DPlane line_through(const EuclidPoint& foot, const Vec3& dir, int n) {
  DPlane xi;
  xi.n = n;
  xi.d = 1;
  xi.frame[0] = dir;
  xi.base = foot;
  return xi;
}

// average over the unit sphere: Gauss-Legendre in cos(polar) x uniform azimuth
double sphere_average(const std::function<double(const Vec3&)>& g, const DirectionRule& dirs) {
  const num::GaussRule& rule = num::gauss_rule(dirs.polar);
  double acc = 0.0;
  for (int i = 0; i < dirs.polar; ++i) {
    const double c = rule.x[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    double ring = 0.0;
    for (int j = 0; j < dirs.azimuth; ++j) {
      const double psi = 2.0 * kPi * j / dirs.azimuth;
      ring += g(Vec3{s * std::cos(psi), s * std::sin(psi), c});
    }
    acc += rule.w[i] * ring / dirs.azimuth;
  }
  return 0.5 * acc;
}

}  // namespace

double dual_at_distance(const SinogramOracle& phi, const EuclidPoint& x, double p, int M,
                        const QuadratureSpec& spec, const DirectionRule& dirs) {
  (void)spec;
  if (p < 0) throw std::invalid_argument("dual_at_distance: p must be >= 0");

  if (phi.n == 2) {
    auto g = [&](double omega) {
      const Vec3 u{std::cos(omega), std::sin(omega), 0.0};
      const Vec3 perp{-u[1], u[0], 0.0};
      EuclidPoint foot{geo::add(x.x, geo::scale(u, p)), 2};
      return phi.phi(line_through(foot, perp, 2));
    };
    return num::integrate_circle(g, M);
  }

  if (phi.d == 1) {
    auto g = [&](const Vec3& u) {
      EuclidPoint foot{geo::add(x.x, geo::scale(u, p)), 3};
      const auto ab = orthocomplement(u);
      double acc = 0.0;
      for (int k = 0; k < dirs.line_circle; ++k) {
        const double chi = kPi * k / dirs.line_circle;  // w and -w give the same line
        const Vec3 w = geo::add(geo::scale(ab[0], std::cos(chi)), geo::scale(ab[1], std::sin(chi)));
        acc += phi.phi(line_through(foot, w, 3));
      }
      return acc / dirs.line_circle;
    };
    return sphere_average(g, dirs);
  }

  // d = 2: planes with normal u at distance p from x
  auto g = [&](const Vec3& u) {
    DPlane xi;
    xi.n = 3;
    xi.d = 2;
    const auto ab = orthocomplement(u);
    xi.frame = {ab[0], ab[1]};
    xi.base = EuclidPoint{geo::add(x.x, geo::scale(u, p)), 3};
    return phi.phi(xi);
  };
  return sphere_average(g, dirs);
}

namespace {

double dual_profile_cutoff(const SinogramOracle& phi, const EuclidPoint& x,
                           const QuadratureSpec& spec) {
  const double x_dist = geo::norm(x.x);
  return std::min(spec.p_cutoff_high, phi.decay.cutoff_radius(1e-15) + x_dist + 0.5);
}

}  // namespace

InversionResult invert_xray(const SinogramOracle& phi, const EuclidPoint& x,
                            const QuadratureSpec& spec, int M, const DirectionRule& dirs) {
  const double P = dual_profile_cutoff(phi, x, spec);
  num::SampledFunction G(num::profile_nodes(P, 0.05),
                         [&](double p) { return dual_at_distance(phi, x, p, M, spec, dirs); });
  auto dG = [&](double p) { return num::d_dp(G, p, spec.fd_step).value; };
  const num::TailResult tail =
      num::weighted_tail_integral(dG, num::TailWeight::OneOverP, spec, P);
  InversionResult out;
  out.value = -tail.value / kPi;
  out.eps_sensitivity = tail.eps_sensitivity / kPi;
  out.divergence_flag = tail.divergence_flag;
  out.p_truncation = P;
  return out;
}

InversionResult invert_dplane(const SinogramOracle& phi, const EuclidPoint& x, double c2,
                              const QuadratureSpec& spec, const DirectionRule& dirs) {
  if (!(c2 == c2)) throw std::logic_error("invert_dplane: calibration constant not frozen");
  if (phi.n != 3 || phi.d != 2)
    throw std::invalid_argument("invert_dplane: requires the (n,d)=(3,2) sinogram");
  // With H(r) = Int_r^inf p G(p) dp, the inner d/d(r^2) is exact by the
  // Leibniz rule: dH/d(r^2) = -G(r)/2.  Only the outer derivative is
  // numerical, so the dual is needed at the six stencil distances only.
  auto K = [&](double r) { return -0.5 * dual_at_distance(phi, x, r, 0, spec, dirs); };
  InversionResult out;
  out.value = c2 * num::iterated_r2_derivative(K, 1, 0.0, 0.05, 0.0);
  out.p_truncation = dual_profile_cutoff(phi, x, spec);
  return out;
}

geo::DPlane line_from_coords(double omega, double q) {
  const Vec3 u{std::cos(omega), std::sin(omega), 0.0};
  DPlane xi;
  xi.n = 2;
  xi.d = 1;
  xi.frame[0] = Vec3{-u[1], u[0], 0.0};
  xi.base = EuclidPoint{geo::scale(u, q), 2};
  return xi;
}

std::pair<double, double> duality_check(const geo::EuclidField& f,
                                        const std::function<double(double, double)>& phi_oq,
                                        double q_halfwidth, const QuadratureSpec& spec,
                                        int M_omega) {
  // LHS: Int_X f(x) * (dual of phi at distance 0)(x) dx over polar coordinates.
  const double Lr = f.decay.cutoff_radius(1e-15);
  auto dual0 = [&](const EuclidPoint& x) {
    auto g = [&](double omega) {
      const Vec3 u{std::cos(omega), std::sin(omega), 0.0};
      return phi_oq(omega, geo::dot(x.x, u));
    };
    return num::integrate_circle(g, M_omega);
  };
  auto radial = [&](double r) {
    auto ang = [&](double psi) {
      EuclidPoint x{Vec3{r * std::cos(psi), r * std::sin(psi), 0.0}, 2};
      return f(x) * dual0(x);
    };
    return num::integrate_circle(ang, M_omega) * 2.0 * kPi * r;
  };
  const double lhs = num::panel_gauss(radial, 0.0, Lr, spec.gauss_order, spec.panel_count);

  // RHS: Int_Xi fhat * phi with d xi = d omega/2pi x dq.
  const double Lq = std::max(q_halfwidth, 1e-6);
  auto per_omega = [&](double omega) {
    auto in_q = [&](double q) {
      const double w = phi_oq(omega, q);
      if (w == 0.0) return 0.0;
      return dplane_forward(f, line_from_coords(omega, q), spec) * w;
    };
    return num::panel_gauss(in_q, -Lq, Lq, spec.gauss_order, spec.panel_count);
  };
  const double rhs = num::integrate_circle(per_omega, M_omega);
  return {lhs, rhs};
}

}  // namespace igt::euclid

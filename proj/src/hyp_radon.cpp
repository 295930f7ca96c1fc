#include "igt/hyp_radon.hpp"

#include <cmath>
#include <stdexcept>

namespace igt::hyp {

using geo::H3Point;
using geo::HypPoint;
using geo::Vec4;
using num::kPi;
using num::QuadratureSpec;

double tg_forward(const geo::DiskField& f, const geo::HypGeodesic& g,
                  const QuadratureSpec& spec) {
  if (!f.decay.present()) throw std::invalid_argument("tg_forward: decay metadata missing");
  const double od = geo::hyp_distance(HypPoint(), g.base());
  auto h = [&](double s) { return f(g.at(s)); };
  return num::integrate_line(h, f.decay, od, spec);
}

double tg_forward(const geo::H3Field& f, const geo::H3Geodesic& g, const QuadratureSpec& spec) {
  if (!f.decay.present()) throw std::invalid_argument("tg_forward: decay metadata missing");
  const double od = geo::h3_distance(geo::h3_origin(), g.p);
  auto h = [&](double s) { return f(g.at(s)); };
  return num::integrate_line(h, f.decay, od, spec);
}

double tg_forward(const geo::H3Field& f, const geo::TotallyGeodesicPlane& P,
                  const QuadratureSpec& spec, const PlaneQuad& pq) {
  if (!f.decay.present()) throw std::invalid_argument("tg_forward: decay metadata missing");
  const double od = geo::h3_distance(geo::h3_origin(), P.p);
  const double L = std::min(f.decay.cutoff_radius() + od, spec.line_cutoff);
  auto radial = [&](double r) {
    auto ang = [&](double th) { return f(P.at(r, th)); };
    return num::integrate_circle(ang, pq.theta) * 2.0 * kPi * std::sinh(r);
  };
  return num::panel_gauss(radial, 0.0, L, spec.gauss_order, pq.r_panels);
}

H2Sinogram make_sinogram(const geo::DiskField& f, const QuadratureSpec& spec) {
  return H2Sinogram{[f, spec](const geo::HypGeodesic& g) { return tg_forward(f, g, spec); },
                    f.decay};
}

H3GeodesicSinogram make_geodesic_sinogram(const geo::H3Field& f, const QuadratureSpec& spec) {
  return H3GeodesicSinogram{
      [f, spec](const geo::H3Geodesic& g) { return tg_forward(f, g, spec); }, f.decay};
}

H3PlaneSinogram make_plane_sinogram(const geo::H3Field& f, const QuadratureSpec& spec,
                                    const PlaneQuad& pq) {
  return H3PlaneSinogram{
      [f, spec, pq](const geo::TotallyGeodesicPlane& P) { return tg_forward(f, P, spec, pq); },
      f.decay};
}

double hyp_dual_at_distance(const H2Sinogram& phi, const HypPoint& x, double p, int M) {
  if (p < 0) throw std::invalid_argument("hyp_dual_at_distance: p must be >= 0");
  auto g = [&](double omega) { return phi.phi(geo::geodesic_at_distance(x, omega, p)); };
  return num::integrate_circle(g, M);
}

namespace {

Vec4 v4_comb(const Vec4& a, double ca, const Vec4& b, double cb) {
  return {ca * a[0] + cb * b[0], ca * a[1] + cb * b[1], ca * a[2] + cb * b[2],
          ca * a[3] + cb * b[3]};
}

// Foot of the perpendicular from x in tangent direction U, plus an orthonormal
// basis (a, b) of the tangent plane at the foot orthogonal to the arriving ray.
struct FootFrame {
  H3Point foot;
  Vec4 a, b;
};

FootFrame foot_frame(const H3Point& x, const Vec4& U, double p) {
  FootFrame out;
  out.foot = geo::h3_exp(x, U, p);
  const Vec4 ray = v4_comb(x.v, std::sinh(p), U, std::cosh(p));  // tangent of the ray at the foot
  const auto fr = geo::h3_frame(out.foot);
  // project the frame off the ray direction, keep the two independent ones
  int got = 0;
  for (int i = 0; i < 3 && got < 2; ++i) {
    Vec4 v = v4_comb(fr[i], 1.0, ray, -geo::lorentz(fr[i], ray));
    if (got == 1) v = v4_comb(v, 1.0, out.a, -geo::lorentz(v, out.a));
    const double n2 = geo::lorentz(v, v);
    if (n2 < 1e-10) continue;
    const double inv = 1.0 / std::sqrt(n2);
    Vec4 w{v[0] * inv, v[1] * inv, v[2] * inv, v[3] * inv};
    (got == 0 ? out.a : out.b) = w;
    ++got;
  }
  if (got != 2) throw std::runtime_error("foot_frame: degenerate configuration");
  return out;
}

// sphere of tangent directions at x, Gauss-Legendre polar x uniform azimuth
double tangent_sphere_average(const H3Point& x, const DirectionRule& dirs,
                              const std::function<double(const Vec4&)>& g) {
  const auto fr = geo::h3_frame(x);
  const num::GaussRule& rule = num::gauss_rule(dirs.polar);
  double acc = 0.0;
  for (int i = 0; i < dirs.polar; ++i) {
    const double c = rule.x[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    double ring = 0.0;
    for (int j = 0; j < dirs.azimuth; ++j) {
      const double psi = 2.0 * kPi * j / dirs.azimuth;
      const Vec4 u = v4_comb(v4_comb(fr[0], s * std::cos(psi), fr[1], s * std::sin(psi)), 1.0,
                             fr[2], c);
      ring += g(u);
    }
    acc += rule.w[i] * ring / dirs.azimuth;
  }
  return 0.5 * acc;
}

}  // namespace

double hyp_dual_at_distance(const H3GeodesicSinogram& phi, const H3Point& x, double p,
                            const DirectionRule& dirs) {
  if (p < 0) throw std::invalid_argument("hyp_dual_at_distance: p must be >= 0");
  return tangent_sphere_average(x, dirs, [&](const Vec4& u) {
    const FootFrame ff = foot_frame(x, u, p);
    double acc = 0.0;
    for (int k = 0; k < dirs.line_circle; ++k) {
      const double chi = kPi * k / dirs.line_circle;
      const Vec4 w = v4_comb(ff.a, std::cos(chi), ff.b, std::sin(chi));
      acc += phi.phi(geo::H3Geodesic{ff.foot, w});
    }
    return acc / dirs.line_circle;
  });
}

double hyp_dual_at_distance(const H3PlaneSinogram& phi, const H3Point& x, double p,
                            const DirectionRule& dirs) {
  if (p < 0) throw std::invalid_argument("hyp_dual_at_distance: p must be >= 0");
  return tangent_sphere_average(x, dirs, [&](const Vec4& u) {
    const FootFrame ff = foot_frame(x, u, p);
    return phi.phi(geo::TotallyGeodesicPlane{ff.foot, ff.a, ff.b});
  });
}

namespace {

double cutoff_from(const num::Decay& decay, double x_dist, const QuadratureSpec& spec) {
  return std::min(spec.p_cutoff_high, decay.cutoff_radius(1e-15) + x_dist + 0.5);
}

InversionResult xray_from_profile(const num::SampledFunction& G, const QuadratureSpec& spec,
                                  double P) {
  auto dG = [&](double p) { return num::d_dp(G, p, spec.fd_step).value; };
  const num::TailResult tail =
      num::weighted_tail_integral(dG, num::TailWeight::OneOverSinhP, spec, P);
  InversionResult out;
  out.value = -tail.value / kPi;
  out.eps_sensitivity = tail.eps_sensitivity / kPi;
  out.divergence_flag = tail.divergence_flag;
  out.p_truncation = P;
  return out;
}

}  // namespace

InversionResult invert_hyp_xray(const H2Sinogram& phi, const HypPoint& x,
                                const QuadratureSpec& spec, int M) {
  const double P = cutoff_from(phi.decay, geo::hyp_distance(HypPoint(), x), spec);
  num::SampledFunction G(num::profile_nodes(P, 0.05),
                         [&](double p) { return hyp_dual_at_distance(phi, x, p, M); });
  return xray_from_profile(G, spec, P);
}

InversionResult invert_hyp_xray(const H3GeodesicSinogram& phi, const H3Point& x,
                                const QuadratureSpec& spec, const DirectionRule& dirs) {
  const double P = cutoff_from(phi.decay, geo::h3_distance(geo::h3_origin(), x), spec);
  num::SampledFunction G(num::profile_nodes(P, 0.05),
                         [&](double p) { return hyp_dual_at_distance(phi, x, p, dirs); });
  return xray_from_profile(G, spec, P);
}

InversionResult invert_hyp_tg(const H3PlaneSinogram& phi, const H3Point& x, double C2,
                              const QuadratureSpec& spec, const DirectionRule& dirs) {
  if (!(C2 == C2)) throw std::logic_error("invert_hyp_tg: calibration constant not frozen");
  // With H(r) = Int_r^inf t^2 dual_{arccosh t}(x) dt, the inner d/d(r^2) is
  // exact by the Leibniz rule: dH/d(r^2) = -(r/2) dual_{arccosh r}(x).  Only
  // the outer derivative is numerical; evaluation sits at r = 1, so the dual
  // is needed at the six stencil distances only.
  auto K = [&](double r) {
    return -0.5 * r * hyp_dual_at_distance(phi, x, std::acosh(std::max(r, 1.0)), dirs);
  };
  InversionResult out;
  out.value = C2 * num::iterated_r2_derivative(K, 1, 1.0, 0.05, 1.0);
  out.p_truncation = cutoff_from(phi.decay, geo::h3_distance(geo::h3_origin(), x), spec);
  return out;
}

}  // namespace igt::hyp

#include "igt/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace igt::geo {

using num::kPi;

// ---------------------------------------------------------------------------
// Euclidean
// ---------------------------------------------------------------------------

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(const Vec3& a, double c) { return {a[0] * c, a[1] * c, a[2] * c}; }

EuclidPoint DPlane::at(double s, double u) const {
  EuclidPoint p;
  p.dim = n;
  p.x = add(base.x, add(scale(frame[0], s), scale(frame[1], u)));
  return p;
}

DPlane plane_at_distance(const EuclidPoint& x, const std::array<Vec3, 2>& frame, int d,
                         const Vec3& u, double p) {
  if (d != 1 && d != 2) throw std::invalid_argument("plane_at_distance: d must be 1 or 2");
  const double tol = 1e-12;
  for (int i = 0; i < d; ++i) {
    if (std::abs(norm(frame[i]) - 1.0) > tol)
      throw std::invalid_argument("plane_at_distance: frame vector not unit");
    if (std::abs(dot(frame[i], u)) > tol)
      throw std::invalid_argument("plane_at_distance: u not orthogonal to frame");
  }
  if (d == 2 && std::abs(dot(frame[0], frame[1])) > tol)
    throw std::invalid_argument("plane_at_distance: frame vectors not orthogonal");
  if (std::abs(norm(u) - 1.0) > tol) throw std::invalid_argument("plane_at_distance: |u| != 1");

  DPlane xi;
  xi.n = x.dim;
  xi.d = d;
  xi.frame = frame;
  xi.base.dim = x.dim;
  xi.base.x = add(x.x, scale(u, p));
  return xi;
}

double point_plane_distance(const EuclidPoint& x, const DPlane& xi) {
  Vec3 y = sub(xi.base.x, x.x);
  for (int i = 0; i < xi.d; ++i) y = sub(y, scale(xi.frame[i], dot(y, xi.frame[i])));
  return norm(y);
}

// ---------------------------------------------------------------------------
// Poincare disk
// ---------------------------------------------------------------------------

HypPoint::HypPoint(cplx zz) : z(zz) {
  if (std::abs(zz) >= 1.0) throw std::domain_error("HypPoint: |z| must be < 1");
}

double poisson_kernel(const HypPoint& z, double theta) {
  const cplx b(std::cos(theta), std::sin(theta));
  const double den = std::norm(z.z - b);
  return (1.0 - std::norm(z.z)) / den;
}

double busemann(const HypPoint& z, double theta) { return std::log(poisson_kernel(z, theta)); }

double hyp_distance(const HypPoint& a, const HypPoint& b) {
  const double num = 2.0 * std::norm(a.z - b.z);
  const double den = (1.0 - std::norm(a.z)) * (1.0 - std::norm(b.z));
  return std::acosh(std::max(1.0, 1.0 + num / den));
}

cplx disk_to_halfplane(cplx z) { return cplx(0.0, 1.0) * (1.0 + z) / (1.0 - z); }
cplx halfplane_to_disk(cplx w) { return (w - cplx(0.0, 1.0)) / (w + cplx(0.0, 1.0)); }

double halfplane_distance(cplx w1, cplx w2) {
  const double num = std::norm(w1 - w2);
  const double den = 2.0 * w1.imag() * w2.imag();
  return std::acosh(std::max(1.0, 1.0 + num / den));
}

cplx Mobius::apply(cplx z) const { return (a * z + b) / (std::conj(b) * z + std::conj(a)); }

Mobius Mobius::then(const Mobius& outer) const {
  Mobius m;
  m.a = outer.a * a + outer.b * std::conj(b);
  m.b = outer.a * b + outer.b * std::conj(a);
  return m;
}

Mobius Mobius::inverse() const {
  Mobius m;
  m.a = std::conj(a);
  m.b = -b;
  return m;
}

Mobius Mobius::translate(cplx z0) {
  Mobius m;
  m.a = 1.0;
  m.b = z0;
  return m;
}

Mobius Mobius::rotate(double phi) {
  Mobius m;
  m.a = cplx(std::cos(0.5 * phi), std::sin(0.5 * phi));
  m.b = 0.0;
  return m;
}

HypPoint HypGeodesic::at(double s) const { return HypPoint(m.apply(std::tanh(0.5 * s))); }

double HypGeodesic::direction() const { return 2.0 * std::arg(m.a); }

std::array<cplx, 2> HypGeodesic::endpoints() const { return {m.apply(-1.0), m.apply(1.0)}; }

HypGeodesic geodesic_from_point_dir(const HypPoint& z0, double dir_angle) {
  HypGeodesic g;
  g.m = Mobius::rotate(dir_angle).then(Mobius::translate(z0.z));
  return g;
}

HypGeodesic geodesic_at_distance(const HypPoint& x, double omega, double p) {
  HypGeodesic g;
  g.m = Mobius::rotate(0.5 * kPi)
            .then(Mobius::translate(std::tanh(0.5 * p)))
            .then(Mobius::rotate(omega))
            .then(Mobius::translate(x.z));
  return g;
}

HypPoint horocycle_point(const Horocycle& xi, double s) {
  const double et = std::exp(xi.t);
  const cplx w(et * s, et);
  const cplx z0 = halfplane_to_disk(w);
  const cplx rot(std::cos(xi.theta), std::sin(xi.theta));
  return HypPoint(rot * z0);
}

// ---------------------------------------------------------------------------
// H^3
// ---------------------------------------------------------------------------

double lorentz(const Vec4& a, const Vec4& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec4 add4(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
Vec4 scale4(const Vec4& a, double c) { return {a[0] * c, a[1] * c, a[2] * c, a[3] * c}; }

namespace {
Vec4 v4_add(const Vec4& a, const Vec4& b) { return add4(a, b); }
Vec4 v4_scale(const Vec4& a, double c) { return scale4(a, c); }
}  // namespace

H3Point h3_origin() { return H3Point{Vec4{1.0, 0.0, 0.0, 0.0}}; }

double h3_distance(const H3Point& a, const H3Point& b) {
  return std::acosh(std::max(1.0, -lorentz(a.v, b.v)));
}

H3Point h3_exp(const H3Point& base, const Vec4& u, double r) {
  return H3Point{v4_add(v4_scale(base.v, std::cosh(r)), v4_scale(u, std::sinh(r)))};
}

std::array<Vec4, 3> h3_frame(const H3Point& p) {
  std::array<Vec4, 3> out;
  int filled = 0;
  for (int axis = 1; axis < 4 && filled < 3; ++axis) {
    Vec4 v{0, 0, 0, 0};
    v[axis] = 1.0;
    // project out the point and previous frame vectors (Lorentz metric)
    v = v4_add(v, v4_scale(p.v, lorentz(v, p.v)));
    for (int j = 0; j < filled; ++j) v = v4_add(v, v4_scale(out[j], -lorentz(v, out[j])));
    const double n2 = lorentz(v, v);
    if (n2 < 1e-14) continue;
    out[filled++] = v4_scale(v, 1.0 / std::sqrt(n2));
  }
  if (filled != 3) throw std::runtime_error("h3_frame: degenerate point");
  return out;
}

H3Point H3Isometry::apply(const H3Point& p) const { return H3Point{apply_vec(p.v)}; }

Vec4 H3Isometry::apply_vec(const Vec4& u) const {
  Vec4 out{0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) out = v4_add(out, v4_scale(cols[j], u[j]));
  return out;
}

H3Isometry h3_translation(const Vec4& spatial_dir, double r) {
  Vec4 n = spatial_dir;
  n[0] = 0.0;
  const double nn = std::sqrt(n[1] * n[1] + n[2] * n[2] + n[3] * n[3]);
  if (nn < 1e-300) throw std::invalid_argument("h3_translation: zero direction");
  n = v4_scale(n, 1.0 / nn);
  const double ch = std::cosh(r), sh = std::sinh(r);
  H3Isometry iso;
  for (int j = 0; j < 4; ++j) {
    Vec4 e{0, 0, 0, 0};
    e[j] = 1.0;
    const double t = e[0];
    const double c = e[1] * n[1] + e[2] * n[2] + e[3] * n[3];
    Vec4 rest = e;
    rest[0] -= t;
    rest = v4_add(rest, v4_scale(n, -c));
    Vec4 img{t * ch + c * sh, 0, 0, 0};
    img = v4_add(img, v4_scale(n, t * sh + c * ch));
    img = v4_add(img, rest);
    iso.cols[j] = img;
  }
  return iso;
}

H3Point H3Geodesic::at(double s) const {
  return H3Point{v4_add(v4_scale(p.v, std::cosh(s)), v4_scale(u, std::sinh(s)))};
}

H3Point TotallyGeodesicPlane::at(double r, double theta) const {
  const Vec4 dir = v4_add(v4_scale(a, std::cos(theta)), v4_scale(b, std::sin(theta)));
  return H3Point{v4_add(v4_scale(p.v, std::cosh(r)), v4_scale(dir, std::sinh(r)))};
}

H3Geodesic TotallyGeodesicPlane::geodesic(double theta) const {
  return H3Geodesic{p, v4_add(v4_scale(a, std::cos(theta)), v4_scale(b, std::sin(theta)))};
}

// ---------------------------------------------------------------------------
// Product space
// ---------------------------------------------------------------------------

double product_distance(const ProductPoint& a, const ProductPoint& b) {
  const double d1 = hyp_distance(a.z1, b.z1);
  const double d2 = hyp_distance(a.z2, b.z2);
  return std::sqrt(d1 * d1 + d2 * d2);
}

void FlatGeodesic::flat_coords(double s, double& u, double& v) const {
  u = p * std::cos(phi) - s * std::sin(phi);
  v = p * std::sin(phi) + s * std::cos(phi);
}

ProductPoint FlatGeodesic::at(double s) const {
  double u, v;
  flat_coords(s, u, v);
  ProductPoint out;
  out.z1 = HypPoint(std::tanh(0.5 * u) * cplx(std::cos(alpha), std::sin(alpha)));
  out.z2 = HypPoint(std::tanh(0.5 * v) * cplx(std::cos(beta), std::sin(beta)));
  return out;
}

// ---------------------------------------------------------------------------
// Phantoms
// ---------------------------------------------------------------------------

PhantomSpec::Kind PhantomSpec::kind_from_string(const std::string& s) {
  if (s == "gaussian-of-distance") return Kind::GaussianOfDistance;
  if (s == "compact-bump") return Kind::CompactBump;
  if (s == "translated-bump") return Kind::TranslatedBump;
  if (s == "ring") return Kind::Ring;
  if (s == "separable-product") return Kind::SeparableProduct;
  throw std::invalid_argument("unknown phantom kind: " + s);
}

std::string PhantomSpec::kind_to_string(Kind k) {
  switch (k) {
    case Kind::GaussianOfDistance: return "gaussian-of-distance";
    case Kind::CompactBump: return "compact-bump";
    case Kind::TranslatedBump: return "translated-bump";
    case Kind::Ring: return "ring";
    case Kind::SeparableProduct: return "separable-product";
  }
  return "?";
}

void PhantomSpec::validate() const {
  if (!(width > 0.0) || !(width2 > 0.0)) throw std::invalid_argument("phantom: width must be positive");
  if (!std::isfinite(amplitude)) throw std::invalid_argument("phantom: amplitude must be finite");
  if ((kind == Kind::CompactBump || kind == Kind::TranslatedBump) && !(support_radius > 0.0))
    throw std::invalid_argument("phantom: support_radius must be positive");
  if (kind == Kind::Ring && !(ring_radius > 0.0))
    throw std::invalid_argument("phantom: ring_radius must be positive");
}

namespace {

double bump_profile(double d, double R, double amp) {
  const double u = d / R;
  if (u >= 1.0) return 0.0;
  const double x = 1.0 - u * u;
  if (x < 1e-3) return 0.0;  // exp(1 - 1/x) underflows anyway
  return amp * std::exp(1.0 - 1.0 / x);
}

}  // namespace

double phantom_profile(const PhantomSpec& ps, double d) {
  switch (ps.kind) {
    case PhantomSpec::Kind::GaussianOfDistance: {
      const double u = d / ps.width;
      return ps.amplitude * std::exp(-u * u);
    }
    case PhantomSpec::Kind::CompactBump:
    case PhantomSpec::Kind::TranslatedBump:
      return bump_profile(d, ps.support_radius, ps.amplitude);
    case PhantomSpec::Kind::Ring: {
      const double q = (d * d - ps.ring_radius * ps.ring_radius) / (ps.width * ps.width);
      return ps.amplitude * std::exp(-q * q);
    }
    case PhantomSpec::Kind::SeparableProduct:
      throw std::invalid_argument("separable-product phantom has no single radial profile");
  }
  return 0.0;
}

num::Decay phantom_decay(const PhantomSpec& ps, double off) {
  const double amp = std::abs(ps.amplitude);
  switch (ps.kind) {
    case PhantomSpec::Kind::GaussianOfDistance:
      return num::Decay::gaussian(1.0 / (ps.width * ps.width), amp, off);
    case PhantomSpec::Kind::CompactBump:
    case PhantomSpec::Kind::TranslatedBump:
      return num::Decay::compact(ps.support_radius, off);
    case PhantomSpec::Kind::Ring: {
      // (d^2-r0^2)^2/w^4 >= (r0^2/w^4) (d-r0)^2 for all d >= 0
      const double rate = ps.ring_radius * ps.ring_radius / std::pow(ps.width, 4);
      return num::Decay::gaussian(rate, amp, off + ps.ring_radius);
    }
    case PhantomSpec::Kind::SeparableProduct: {
      const double rate = std::min(1.0 / (ps.width * ps.width), 1.0 / (ps.width2 * ps.width2));
      return num::Decay::gaussian(rate, amp, off);
    }
  }
  return num::Decay{};
}

double disk_integral(const std::function<double(const HypPoint&)>& g, double r_cutoff,
                     const num::QuadratureSpec& spec, int M_angle) {
  auto radial = [&](double r) {
    const double rad = std::tanh(0.5 * r);
    auto ang = [&](double psi) { return g(HypPoint(rad * cplx(std::cos(psi), std::sin(psi)))); };
    return num::integrate_circle(ang, M_angle) * 2.0 * kPi * std::sinh(r);
  };
  return num::panel_gauss(radial, 0.0, r_cutoff, spec.gauss_order, spec.panel_count);
}

EuclidField phantom_euclid(const PhantomSpec& ps, int dim, const EuclidPoint& center) {
  ps.validate();
  if (ps.kind == PhantomSpec::Kind::SeparableProduct)
    throw std::invalid_argument("separable-product phantom is product-space only");
  EuclidField out;
  out.dim = dim;
  out.decay = phantom_decay(ps, norm(center.x));
  out.f = [ps, center](const EuclidPoint& p) {
    return phantom_profile(ps, norm(sub(p.x, center.x)));
  };
  return out;
}

DiskField phantom_disk(const PhantomSpec& ps, const HypPoint& center) {
  ps.validate();
  if (ps.kind == PhantomSpec::Kind::SeparableProduct)
    throw std::invalid_argument("separable-product phantom is product-space only");
  DiskField out;
  out.decay = phantom_decay(ps, hyp_distance(HypPoint(), center));
  out.f = [ps, center](const HypPoint& p) {
    return phantom_profile(ps, hyp_distance(p, center));
  };
  return out;
}

H3Field phantom_h3(const PhantomSpec& ps, const H3Point& center) {
  ps.validate();
  if (ps.kind == PhantomSpec::Kind::SeparableProduct)
    throw std::invalid_argument("separable-product phantom is product-space only");
  H3Field out;
  out.decay = phantom_decay(ps, h3_distance(h3_origin(), center));
  out.f = [ps, center](const H3Point& p) {
    return phantom_profile(ps, h3_distance(p, center));
  };
  return out;
}

ProductField phantom_product(const PhantomSpec& ps, const ProductPoint& center) {
  ps.validate();
  ProductField out;
  out.decay = phantom_decay(ps, product_distance(ProductPoint{}, center));
  if (ps.kind == PhantomSpec::Kind::SeparableProduct) {
    out.f = [ps, center](const ProductPoint& p) {
      const double d1 = hyp_distance(p.z1, center.z1) / ps.width;
      const double d2 = hyp_distance(p.z2, center.z2) / ps.width2;
      return ps.amplitude * std::exp(-d1 * d1 - d2 * d2);
    };
  } else {
    out.f = [ps, center](const ProductPoint& p) {
      return phantom_profile(ps, product_distance(p, center));
    };
  }
  return out;
}

}  // namespace igt::geo

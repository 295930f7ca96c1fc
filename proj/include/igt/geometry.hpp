#pragma once

// Coordinate models: R^n (n = 2,3), the Poincare disk, H^3 in the hyperboloid
// model, the product H^2 x H^2, and the parametrized families of planes,
// geodesics, horocycles and flat-geodesics the transforms integrate over.
// Everything is immutable after construction and safe for parallel use.

#include <array>
#include <complex>
#include <functional>
#include <string>

#include "igt/numerics.hpp"

namespace igt::geo {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Euclidean R^n, n in {2,3}
// ---------------------------------------------------------------------------

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
Vec3 scale(const Vec3& a, double c);

struct EuclidPoint {
  Vec3 x{0.0, 0.0, 0.0};
  int dim = 2;
};

// A d-plane in R^n: base point plus d orthonormal directions.
struct DPlane {
  int n = 2;
  int d = 1;
  std::array<Vec3, 2> frame{Vec3{0, 0, 0}, Vec3{0, 0, 0}};
  EuclidPoint base;

  EuclidPoint at(double s, double u = 0.0) const;  // base + s*frame0 (+ u*frame1)
};

// Plane through x + p*u spanned by `frame` (u orthonormal to the frame).
// Validates orthonormality to 1e-12.
DPlane plane_at_distance(const EuclidPoint& x, const std::array<Vec3, 2>& frame, int d,
                         const Vec3& u, double p);

double point_plane_distance(const EuclidPoint& x, const DPlane& xi);

// ---------------------------------------------------------------------------
// Poincare disk (curvature -1, metric 2|dz|/(1-|z|^2), rho = 1/2)
// ---------------------------------------------------------------------------

struct HypPoint {
  cplx z{0.0, 0.0};
  HypPoint() = default;
  explicit HypPoint(cplx zz);  // validates |z| < 1
};

// Busemann bracket A(z, e^{i theta}) = log((1-|z|^2)/|z-e^{i theta}|^2);
// A(0,.) = 0, and the point tanh(t/2) e^{i theta} has A = t.
double busemann(const HypPoint& z, double theta);
double poisson_kernel(const HypPoint& z, double theta);  // e^{A(z,theta)}

double hyp_distance(const HypPoint& a, const HypPoint& b);

// Cayley dictionary with the upper half plane, 0 <-> i.
cplx disk_to_halfplane(cplx z);
cplx halfplane_to_disk(cplx w);
double halfplane_distance(cplx w1, cplx w2);

// Moebius isometries of the disk, stored as (a z + b)/(conj(b) z + conj(a)).
struct Mobius {
  cplx a{1.0, 0.0}, b{0.0, 0.0};

  cplx apply(cplx z) const;
  Mobius then(const Mobius& outer) const;  // outer ∘ this
  Mobius inverse() const;
  static Mobius translate(cplx z0);   // 0 -> z0
  static Mobius rotate(double phi);   // z -> e^{i phi} z
};

// Unit-speed complete geodesic, gamma(s) = M(tanh(s/2)).
struct HypGeodesic {
  Mobius m;
  HypPoint at(double s) const;
  HypPoint base() const { return HypPoint(m.apply(0.0)); }
  double direction() const;            // Euclidean angle of the tangent at s=0
  std::array<cplx, 2> endpoints() const;  // boundary points at s = -inf, +inf
};

HypGeodesic geodesic_from_point_dir(const HypPoint& z0, double dir_angle);
// Geodesic at distance p from x: foot reached from x along direction `omega`,
// the geodesic orthogonal to that ray at the foot.
HypGeodesic geodesic_at_distance(const HypPoint& x, double omega, double p);

// Horocycle tangent at e^{i theta} with signed distance t from the origin.
struct Horocycle {
  double t = 0.0;
  double theta = 0.0;
};

// Unit-speed arc-length point; s=0 is the point of the horocycle on the
// radial ray toward the tangency point.
HypPoint horocycle_point(const Horocycle& xi, double s);

// ---------------------------------------------------------------------------
// H^3, hyperboloid model in R^{3,1}
// ---------------------------------------------------------------------------

using Vec4 = std::array<double, 4>;

double lorentz(const Vec4& a, const Vec4& b);  // -a0 b0 + a1 b1 + a2 b2 + a3 b3
Vec4 add4(const Vec4& a, const Vec4& b);
Vec4 scale4(const Vec4& a, double c);

struct H3Point {
  Vec4 v{1.0, 0.0, 0.0, 0.0};
};

H3Point h3_origin();
double h3_distance(const H3Point& a, const H3Point& b);
// Point at distance r from `base` along the unit tangent u.
H3Point h3_exp(const H3Point& base, const Vec4& u, double r);
// Orthonormal tangent frame at a point (three spacelike vectors).
std::array<Vec4, 3> h3_frame(const H3Point& p);
// Lorentz boost mapping the origin to h3_exp(origin, n, r); n spatial unit.
struct H3Isometry {
  std::array<Vec4, 4> cols;  // column-major action
  H3Point apply(const H3Point& p) const;
  Vec4 apply_vec(const Vec4& u) const;
};
H3Isometry h3_translation(const Vec4& spatial_dir, double r);

struct H3Geodesic {
  H3Point p;  // point on the geodesic
  Vec4 u;     // unit tangent
  H3Point at(double s) const;
};

// Totally geodesic H^2 inside H^3: point plus orthonormal tangent 2-frame;
// in-plane geodesic polar coordinates about that point.
struct TotallyGeodesicPlane {
  H3Point p;
  Vec4 a, b;
  H3Point at(double r, double theta) const;
  H3Geodesic geodesic(double theta) const;  // in-plane geodesic through p
};

// ---------------------------------------------------------------------------
// X = H^2 x H^2 (rank two)
// ---------------------------------------------------------------------------

struct ProductPoint {
  HypPoint z1, z2;
};

double product_distance(const ProductPoint& a, const ProductPoint& b);

// Geodesic inside the flat spanned by the factor diameters at angles
// (alpha, beta), at distance p >= 0 from the origin, rotated by phi in the
// flat:  s -> (exp1((p cos phi - s sin phi) X_alpha), exp2((p sin phi + s cos phi) Y_beta)).
struct FlatGeodesic {
  double alpha = 0.0, beta = 0.0, phi = 0.0, p = 0.0;
  ProductPoint at(double s) const;
  void flat_coords(double s, double& u, double& v) const;
};

// ---------------------------------------------------------------------------
// Scalar fields and phantoms
// ---------------------------------------------------------------------------

struct EuclidField {
  std::function<double(const EuclidPoint&)> f;
  num::Decay decay;
  int dim = 2;
  double operator()(const EuclidPoint& p) const { return f(p); }
};

struct DiskField {
  std::function<double(const HypPoint&)> f;
  num::Decay decay;
  double operator()(const HypPoint& p) const { return f(p); }
};

struct H3Field {
  std::function<double(const H3Point&)> f;
  num::Decay decay;
  double operator()(const H3Point& p) const { return f(p); }
};

struct ProductField {
  std::function<double(const ProductPoint&)> f;
  num::Decay decay;
  double operator()(const ProductPoint& p) const { return f(p); }
};

struct PhantomSpec {
  enum class Kind { GaussianOfDistance, CompactBump, TranslatedBump, Ring, SeparableProduct };
  Kind kind = Kind::GaussianOfDistance;
  double width = 1.0;           // gaussian width (f ~ amp e^{-d^2/width^2})
  double width2 = 1.0;          // second factor width (separable-product)
  double amplitude = 1.0;       // value at the phantom center
  double support_radius = 1.0;  // compact kinds
  double ring_radius = 1.0;     // ring kinds

  static Kind kind_from_string(const std::string& s);
  static std::string kind_to_string(Kind k);
  void validate() const;
};

// Profile g(d) of a radial phantom, with its decay metadata (offset folded in
// by the callers for translated centers).
double phantom_profile(const PhantomSpec& ps, double d);
num::Decay phantom_decay(const PhantomSpec& ps, double center_offset);

// Int_{H^2} g dA in geodesic polar coordinates about the origin
// (area element sinh r dr dtheta), r up to r_cutoff.
double disk_integral(const std::function<double(const HypPoint&)>& g, double r_cutoff,
                     const num::QuadratureSpec& spec, int M_angle = 64);

EuclidField phantom_euclid(const PhantomSpec& ps, int dim, const EuclidPoint& center);
DiskField phantom_disk(const PhantomSpec& ps, const HypPoint& center);
H3Field phantom_h3(const PhantomSpec& ps, const H3Point& center);
// SeparableProduct: g_w(d1) * g_w2(d2); other kinds use the product distance
// from `center`.
ProductField phantom_product(const PhantomSpec& ps, const ProductPoint& center);

}  // namespace igt::geo

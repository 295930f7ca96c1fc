#pragma once

// Quadrature, finite differences and Fourier-multiplier machinery shared by
// every transform module.  All routines are deterministic and side-effect
// free; rule caches are built on first use.

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace igt::num {

using cplx = std::complex<double>;
using RealFn = std::function<double(double)>;

inline constexpr double kPi = 3.14159265358979323846;

struct QuadratureSpec {
  int    gauss_order   = 32;    // points per Gauss-Legendre panel
  int    panel_count   = 8;     // panels for plain line integrals
  double line_cutoff   = 30.0;  // hard cap on line-integral half-length
  double p_cutoff_low  = 1e-4;  // epsilon of the tail integrals
  double p_cutoff_high = 30.0;  // P of the tail integrals
  double fd_step       = 1e-2;  // finite-difference step
  double grid_T        = 24.0;  // half-width of the t-grid
  int    grid_N        = 4096;  // number of t-samples, power of two

  void validate() const;  // throws std::invalid_argument
};

// Nodes and weights on [-1,1].
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_rule(int n);

// Decay metadata attached to every scalar field.  The bound is
//   |f(x)| <= amp                                   d <= support_radius (compact)
//   |f(x)| <= amp * exp(-rate * max(0, d - center_offset)^2)   (gaussian)
// with d the distance of x from the base point of the space.
struct Decay {
  enum class Kind { None, Compact, Gaussian };
  Kind   kind = Kind::None;
  double support_radius = 0.0;
  double gaussian_rate  = 0.0;
  double amp            = 1.0;
  double center_offset  = 0.0;

  static Decay compact(double radius, double offset = 0.0);
  static Decay gaussian(double rate, double amp = 1.0, double offset = 0.0);
  // Distance beyond which |f| < tiny; infinite decay information is required.
  double cutoff_radius(double tiny = 1e-16) const;
  bool present() const { return kind != Kind::None; }
};

// Composite Gauss-Legendre of g over [a,b].
double panel_gauss(const RealFn& g, double a, double b, int order, int panels);

// Arc-length integral of g over the whole line.  The truncation half-length
// comes from the decay metadata and the distance of the curve's s=0 point
// from the decay center; it is capped by spec.line_cutoff.
// Throws std::invalid_argument when decay metadata is missing.
double integrate_line(const RealFn& g, const Decay& decay, double origin_distance,
                      const QuadratureSpec& spec);
double line_half_length(const Decay& decay, double origin_distance,
                        const QuadratureSpec& spec);

// Average of a 2pi-periodic function: (1/2pi) * trapezoid with M points.
double integrate_circle(const RealFn& g, int M);
cplx   integrate_circle_c(const std::function<cplx(double)>& g, int M);

enum class TailWeight { OneOverP, OneOverSinhP };

struct TailResult {
  double value = 0.0;
  double eps_sensitivity = 0.0;  // |value(eps) - value(eps/2)|
  bool   divergence_flag = false;
};

// integral of F(p) * weight(p) dp over [eps, P] with panels geometrically
// refined toward eps.  p_high_override < 0 keeps spec.p_cutoff_high.
TailResult weighted_tail_integral(const RealFn& F, TailWeight w,
                                  const QuadratureSpec& spec,
                                  double p_high_override = -1.0);

struct DerivResult {
  double value = 0.0;
  double used_h = 0.0;
  double richardson_delta = 0.0;  // |D_h - D_{h/2}| instability estimate
  bool   clamped = false;         // h was shrunk to keep the stencil in-domain
};

// d/dp via 4th-order central differences at steps h and h/2, Richardson
// combined.  The stencil is kept above domain_low by shrinking h.
DerivResult d_dp(const RealFn& F, double p, double h, double domain_low = 0.0);

// (d/d(r^2))^d of F(r) at r0, d in {1,2}.  Works in q = r^2 with 4th-order
// stencils, one-sided when q0 is within reach of q_min.
double iterated_r2_derivative(const RealFn& F, int d, double r0, double h,
                              double q_min = 0.0);

// In-place radix-2 FFT; inverse includes the 1/N factor.
void fft_inplace(std::vector<cplx>& a, bool inverse);

// Uniform samples of a function on t_k = -T + k*(2T/N), k = 0..N-1.
struct EvenGridFunction {
  double T = 24.0;
  int    N = 4096;
  bool   even_flag = false;
  std::vector<double> v;

  EvenGridFunction() = default;
  EvenGridFunction(double T_, int N_, bool even);

  double dt() const { return 2.0 * T / N; }
  double t_at(int k) const { return -T + (2.0 * T / N) * k; }

  void fill(const RealFn& g);
  // |g(t)-g(-t)| <= tol * max|g| on the grid; throws when flagged even and violated.
  void check_evenness(double tol = 1e-10) const;
  double max_abs() const;
  double interp(double t) const;  // local 4-point Lagrange, 0 outside
  // Euclidean Fourier transform value  dt * sum g(t_k) e^{-i lambda t_k}.
  cplx fourier_at(double lambda) const;
};

// lambda-grid samples of a spectral multiplier on the DFT dual grid.
struct Multiplier {
  std::vector<cplx> bins;  // FFT bin order

  static double bin_lambda(int j, int N, double T);
  static Multiplier from_function(int N, double T, const std::function<cplx(double)>& m);
  // m(-lambda) = conj(m(lambda)) up to tol (real-output multipliers).
  void check_real_output(int N, double T, double tol = 1e-10) const;
};

// CSV with header t,value.
void write_grid_csv(std::ostream& os, const EvenGridFunction& g);

// DFT -> pointwise multiply -> inverse DFT.  Requires the samples to have
// decayed at the grid ends (no wraparound); throws otherwise with the grid_T
// that would be needed.
EvenGridFunction apply_multiplier(const EvenGridFunction& g, const Multiplier& m);

// Plain grid convolution (g1 * g2)(t) = dt * sum_k g1(t_k) g2(t - t_k),
// evaluated on the same grid via FFT.
EvenGridFunction grid_convolution(const EvenGridFunction& g1, const EvenGridFunction& g2);

// Memoization of an expensive smooth profile on fixed nodes with local
// 4-point Lagrange interpolation in between.  Used for the dual-transform
// profiles p -> dual_p(x) whose every sample is a full quadrature.
class SampledFunction {
 public:
  SampledFunction() = default;
  SampledFunction(std::vector<double> nodes, const RealFn& F);
  double operator()(double x) const;
  double x_min() const { return xs_.front(); }
  double x_max() const { return xs_.back(); }

 private:
  std::vector<double> xs_, vs_;
};

// Nodes for a profile on [0, P]: geometric refinement toward 0 followed by a
// uniform sweep; `fine_step` controls the uniform part.
std::vector<double> profile_nodes(double P, double fine_step = 0.05);

// Deterministic parallel map: body(i) for i in [0, n), strided over `jobs`
// threads (serial when jobs <= 1).  Bodies must write to disjoint slots.
void parallel_for(int n, int jobs, const std::function<void(int)>& body);

}  // namespace igt::num

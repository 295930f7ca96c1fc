#include "igt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace igt::num {

void QuadratureSpec::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("QuadratureSpec: " + msg); };
  if (gauss_order < 2) fail("gauss_order must be >= 2");
  if (panel_count < 1) fail("panel_count must be >= 1");
  if (line_cutoff <= 0) fail("line_cutoff must be positive");
  if (p_cutoff_low <= 0) fail("p_cutoff_low must be positive");
  if (p_cutoff_high <= p_cutoff_low) fail("p_cutoff_high must exceed p_cutoff_low");
  if (fd_step <= 0) fail("fd_step must be positive");
  if (grid_T <= 0) fail("grid_T must be positive");
  if (grid_N < 8 || (grid_N & (grid_N - 1)) != 0) fail("grid_N must be a power of two >= 8");
}

const GaussRule& gauss_rule(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

Decay Decay::compact(double radius, double offset) {
  Decay d;
  d.kind = Kind::Compact;
  d.support_radius = radius;
  d.center_offset = offset;
  return d;
}

Decay Decay::gaussian(double rate, double amp, double offset) {
  Decay d;
  d.kind = Kind::Gaussian;
  d.gaussian_rate = rate;
  d.amp = amp;
  d.center_offset = offset;
  return d;
}

double Decay::cutoff_radius(double tiny) const {
  switch (kind) {
    case Kind::Compact:
      return center_offset + support_radius;
    case Kind::Gaussian: {
      const double logterm = std::log(std::max(amp, 1e-300) / tiny);
      return center_offset + std::sqrt(std::max(logterm, 0.0) / gaussian_rate);
    }
    case Kind::None:
      break;
  }
  throw std::invalid_argument("decay metadata missing");
}

double panel_gauss(const RealFn& g, double a, double b, int order, int panels) {
  if (b <= a) return 0.0;
  const GaussRule& rule = gauss_rule(order);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double acc = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) acc += rule.w[i] * g(mid + 0.5 * h * rule.x[i]);
    total += 0.5 * h * acc;
  }
  return total;
}

double line_half_length(const Decay& decay, double origin_distance, const QuadratureSpec& spec) {
  if (!decay.present()) throw std::invalid_argument("integrate_line: decay metadata missing");
  // |s| <= cutoff_radius + distance of the curve's s=0 point (reverse triangle
  // inequality for unit-speed curves).
  const double L = decay.cutoff_radius() + std::abs(origin_distance);
  return std::min(L, spec.line_cutoff);
}

double integrate_line(const RealFn& g, const Decay& decay, double origin_distance,
                      const QuadratureSpec& spec) {
  const double L = line_half_length(decay, origin_distance, spec);
  return panel_gauss(g, -L, L, spec.gauss_order, spec.panel_count);
}

double integrate_circle(const RealFn& g, int M) {
  if (M < 1) throw std::invalid_argument("integrate_circle: M must be positive");
  double acc = 0.0;
  for (int j = 0; j < M; ++j) acc += g(2.0 * kPi * j / M);
  return acc / M;
}

cplx integrate_circle_c(const std::function<cplx(double)>& g, int M) {
  if (M < 1) throw std::invalid_argument("integrate_circle: M must be positive");
  cplx acc = 0.0;
  for (int j = 0; j < M; ++j) acc += g(2.0 * kPi * j / M);
  return acc / static_cast<double>(M);
}

namespace {

double tail_over(const RealFn& F, TailWeight w, double eps, double phigh, int order) {
  // Panels geometric from eps up to min(1, phigh), then uniform.
  auto weighted = [&](double p) {
    const double denom = (w == TailWeight::OneOverP) ? p : std::sinh(p);
    return F(p) / denom;
  };
  std::vector<double> edges;
  edges.push_back(eps);
  double p = eps;
  while (p < std::min(1.0, phigh)) {
    p = std::min(p * 2.0, std::min(1.0, phigh));
    edges.push_back(p);
  }
  while (p < phigh) {
    p = std::min(p + 0.5, phigh);
    edges.push_back(p);
  }
  double total = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    total += panel_gauss(weighted, edges[i], edges[i + 1], order, 1);
  return total;
}

}  // namespace

TailResult weighted_tail_integral(const RealFn& F, TailWeight w, const QuadratureSpec& spec,
                                  double p_high_override) {
  const double eps = spec.p_cutoff_low;
  const double P = (p_high_override > 0) ? p_high_override : spec.p_cutoff_high;
  TailResult out;
  out.value = tail_over(F, w, eps, P, spec.gauss_order);
  const double refined = tail_over(F, w, eps * 0.5, P, spec.gauss_order);
  out.eps_sensitivity = std::abs(refined - out.value);
  // A genuinely divergent integrand keeps adding ~log(2) worth of mass per
  // eps-halving; flag when the halving shifts the value by a macroscopic
  // fraction of it.
  const double scale = std::max({std::abs(out.value), std::abs(refined), 1e-300});
  out.divergence_flag = out.eps_sensitivity > 1e-2 * scale;
  return out;
}

namespace {

double central4(const RealFn& F, double p, double h) {
  return (-F(p + 2 * h) + 8 * F(p + h) - 8 * F(p - h) + F(p - 2 * h)) / (12 * h);
}

}  // namespace

DerivResult d_dp(const RealFn& F, double p, double h, double domain_low) {
  DerivResult out;
  double hh = h;
  if (p - 2 * hh <= domain_low) {
    hh = std::max((p - domain_low) / 3.0, 1e-8);
    out.clamped = true;
  }
  out.used_h = hh;
  const double d1 = central4(F, p, hh);
  const double d2 = central4(F, p, hh * 0.5);
  out.value = (16.0 * d2 - d1) / 15.0;
  out.richardson_delta = std::abs(d2 - d1);
  return out;
}

namespace {

// one-sided 4th-order first/second derivative stencils (forward).
double forward_d1(const std::function<double(double)>& G, double q0, double h) {
  const double f0 = G(q0), f1 = G(q0 + h), f2 = G(q0 + 2 * h), f3 = G(q0 + 3 * h),
               f4 = G(q0 + 4 * h);
  return (-25 * f0 + 48 * f1 - 36 * f2 + 16 * f3 - 3 * f4) / (12 * h);
}

double forward_d2(const std::function<double(double)>& G, double q0, double h) {
  const double f0 = G(q0), f1 = G(q0 + h), f2 = G(q0 + 2 * h), f3 = G(q0 + 3 * h),
               f4 = G(q0 + 4 * h), f5 = G(q0 + 5 * h);
  return (3.75 * f0 - (77.0 / 6.0) * f1 + (107.0 / 6.0) * f2 - 13.0 * f3 + (61.0 / 12.0) * f4 -
          (5.0 / 6.0) * f5) /
         (h * h);
}

double central_d1(const std::function<double(double)>& G, double q0, double h) {
  return (-G(q0 + 2 * h) + 8 * G(q0 + h) - 8 * G(q0 - h) + G(q0 - 2 * h)) / (12 * h);
}

double central_d2(const std::function<double(double)>& G, double q0, double h) {
  return (-G(q0 + 2 * h) + 16 * G(q0 + h) - 30 * G(q0) + 16 * G(q0 - h) - G(q0 - 2 * h)) /
         (12 * h * h);
}

}  // namespace

double iterated_r2_derivative(const RealFn& F, int d, double r0, double h, double q_min) {
  if (d != 1 && d != 2) throw std::invalid_argument("iterated_r2_derivative: d must be 1 or 2");
  const double q0 = r0 * r0;
  auto G = [&](double q) { return F(std::sqrt(std::max(q, q_min))); };
  const bool one_sided = (q0 - 2 * h) < q_min;
  if (d == 1) return one_sided ? forward_d1(G, q0, h) : central_d1(G, q0, h);
  return one_sided ? forward_d2(G, q0, h) : central_d2(G, q0, h);
}

void fft_inplace(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    for (auto& z : a) z /= static_cast<double>(n);
  }
}

EvenGridFunction::EvenGridFunction(double T_, int N_, bool even)
    : T(T_), N(N_), even_flag(even), v(static_cast<size_t>(N_), 0.0) {}

void EvenGridFunction::fill(const RealFn& g) {
  for (int k = 0; k < N; ++k) v[k] = g(t_at(k));
  if (even_flag) check_evenness();
}

double EvenGridFunction::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void EvenGridFunction::check_evenness(double tol) const {
  if (!even_flag) return;
  const double m = max_abs();
  if (m == 0.0) return;
  for (int k = 1; k < N; ++k) {
    if (std::abs(v[k] - v[N - k]) > tol * m) {
      std::ostringstream msg;
      msg << "EvenGridFunction: evenness violated at t=" << t_at(k) << " by "
          << std::abs(v[k] - v[N - k]) / m;
      throw std::invalid_argument(msg.str());
    }
  }
}

double EvenGridFunction::interp(double t) const {
  const double dt_ = dt();
  const double u = (t + T) / dt_;
  if (u < 0.0 || u > N - 1) return 0.0;
  int i1 = static_cast<int>(std::floor(u));
  int i0 = std::clamp(i1 - 1, 0, N - 4);
  const double x = u - i0;
  // 4-point Lagrange on nodes 0,1,2,3 of the local window
  const double c0 = -(x - 1) * (x - 2) * (x - 3) / 6.0;
  const double c1 = x * (x - 2) * (x - 3) / 2.0;
  const double c2 = -x * (x - 1) * (x - 3) / 2.0;
  const double c3 = x * (x - 1) * (x - 2) / 6.0;
  return c0 * v[i0] + c1 * v[i0 + 1] + c2 * v[i0 + 2] + c3 * v[i0 + 3];
}

cplx EvenGridFunction::fourier_at(double lambda) const {
  cplx acc = 0.0;
  for (int k = 0; k < N; ++k) {
    const double t = t_at(k);
    acc += v[k] * cplx(std::cos(lambda * t), -std::sin(lambda * t));
  }
  return acc * dt();
}

double Multiplier::bin_lambda(int j, int N, double T) {
  const double dl = kPi / T;  // 2*pi / (N * dt)
  const int jj = (j <= N / 2) ? j : j - N;
  return dl * jj;
}

Multiplier Multiplier::from_function(int N, double T, const std::function<cplx(double)>& m) {
  Multiplier out;
  out.bins.resize(static_cast<size_t>(N));
  for (int j = 0; j < N; ++j) out.bins[j] = m(bin_lambda(j, N, T));
  return out;
}

void Multiplier::check_real_output(int N, double T, double tol) const {
  (void)T;
  for (int j = 1; j < N; ++j) {
    const cplx diff = bins[j] - std::conj(bins[(N - j) % N]);
    if (std::abs(diff) > tol)
      throw std::invalid_argument("Multiplier: m(-lambda) != conj(m(lambda))");
  }
}

void write_grid_csv(std::ostream& os, const EvenGridFunction& g) {
  os << "t,value\n";
  for (int k = 0; k < g.N; ++k) os << g.t_at(k) << ',' << g.v[k] << '\n';
}

EvenGridFunction apply_multiplier(const EvenGridFunction& g, const Multiplier& m) {
  if (static_cast<int>(m.bins.size()) != g.N)
    throw std::invalid_argument("apply_multiplier: multiplier grid size mismatch");
  const double m0 = g.max_abs();
  const double edge = std::max(std::abs(g.v.front()), std::abs(g.v.back()));
  // threshold sits above the FFT roundoff floor of chained multipliers with
  // gains up to 1e6, yet far below any genuine wraparound
  if (m0 > 0 && edge > 3e-9 * m0) {
    std::ostringstream msg;
    msg << "apply_multiplier: wraparound detected, samples at the grid ends reach " << edge / m0
        << " of max; increase grid_T beyond " << g.T;
    throw std::invalid_argument(msg.str());
  }
  std::vector<cplx> work(g.v.begin(), g.v.end());
  fft_inplace(work, false);
  for (int j = 0; j < g.N; ++j) work[j] *= m.bins[j];
  fft_inplace(work, true);
  EvenGridFunction out(g.T, g.N, false);
  for (int k = 0; k < g.N; ++k) out.v[k] = work[k].real();
  return out;
}

SampledFunction::SampledFunction(std::vector<double> nodes, const RealFn& F)
    : xs_(std::move(nodes)) {
  if (xs_.size() < 4) throw std::invalid_argument("SampledFunction: need at least 4 nodes");
  vs_.reserve(xs_.size());
  for (double x : xs_) vs_.push_back(F(x));
}

double SampledFunction::operator()(double x) const {
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  int i = static_cast<int>(it - xs_.begin()) - 1;
  i = std::clamp(i - 1, 0, static_cast<int>(xs_.size()) - 4);
  double out = 0.0;
  for (int a = 0; a < 4; ++a) {
    double term = vs_[i + a];
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      term *= (x - xs_[i + b]) / (xs_[i + a] - xs_[i + b]);
    }
    out += term;
  }
  return out;
}

std::vector<double> profile_nodes(double P, double fine_step) {
  std::vector<double> xs{0.0};
  for (double x = 1e-4; x < 0.2 && x < P; x *= 1.7) xs.push_back(x);
  // uniform sweep with head-room for stencils just past P
  for (double x = std::min(0.2, P); x < P + 2.5 * fine_step; x += fine_step) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](double a, double b) { return std::abs(a - b) < 1e-9; }),
           xs.end());
  return xs;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  const int nt = std::min(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([t, n, nt, &body] {
      for (int i = t; i < n; i += nt) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

EvenGridFunction grid_convolution(const EvenGridFunction& g1, const EvenGridFunction& g2) {
  if (g1.N != g2.N || g1.T != g2.T)
    throw std::invalid_argument("grid_convolution: grids must match");
  const int N = g1.N;
  std::vector<cplx> a(g1.v.begin(), g1.v.end());
  std::vector<cplx> b(g2.v.begin(), g2.v.end());
  fft_inplace(a, false);
  fft_inplace(b, false);
  for (int j = 0; j < N; ++j) a[j] *= b[j];
  fft_inplace(a, true);
  // circular convolution sum_k g1[k] g2[j-k]; index j-k wraps, and the t-offset
  // -T shifts the origin by N/2 grid steps.
  EvenGridFunction out(g1.T, N, false);
  const double dt = g1.dt();
  for (int k = 0; k < N; ++k) out.v[k] = a[(k + N / 2) % N].real() * dt;
  return out;
}

}  // namespace igt::num

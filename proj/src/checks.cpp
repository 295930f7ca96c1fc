#include "igt/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "igt/abel.hpp"
#include "igt/cfunction.hpp"
#include "igt/euclid_radon.hpp"
#include "igt/hfourier.hpp"
#include "igt/horocycle.hpp"
#include "igt/hyp_radon.hpp"
#include "igt/xray_product.hpp"

namespace igt::checks {

using geo::HypPoint;
using geo::PhantomSpec;
using num::kPi;
using num::QuadratureSpec;
using nlohmann::json;

namespace {

// lambda band shared by the spectral checks
constexpr double kLambdaMax = 8.0;
constexpr double kDLambda = 1.0 / 16.0;
constexpr int kJ = 64;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

ReportRow threshold_row(const std::string& id, const std::string& anchor, double value,
                        double min_required) {
  ReportRow r;
  r.check_id = id;
  r.paper_anchor = anchor;
  r.value = value;
  r.reference = min_required;
  r.abs_err = 0.0;
  r.rel_err = 0.0;
  r.tolerance = min_required;
  r.pass = value >= min_required;
  return r;
}

std::vector<HypPoint> disk_probes(int count, double rmax_hyp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * kPi), urad(0.0, 1.0);
  std::vector<HypPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double r = rmax_hyp * std::sqrt(urad(rng));
    const double a = uang(rng);
    out.emplace_back(std::tanh(0.5 * r) * geo::cplx(std::cos(a), std::sin(a)));
  }
  return out;
}

std::vector<geo::EuclidPoint> euclid_probes(int count, int dim, double rmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> urad(0.0, 1.0);
  std::vector<geo::EuclidPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    geo::Vec3 d{gauss(rng), gauss(rng), dim == 3 ? gauss(rng) : 0.0};
    const double n = geo::norm(d);
    const double r = rmax * std::pow(urad(rng), 1.0 / dim);
    out.push_back(geo::EuclidPoint{geo::scale(d, r / std::max(n, 1e-12)), dim});
  }
  return out;
}

std::vector<geo::H3Point> h3_probes(int count, double rmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> urad(0.0, 1.0);
  std::vector<geo::H3Point> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    geo::Vec4 d{0.0, gauss(rng), gauss(rng), gauss(rng)};
    const double n = std::sqrt(d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
    const double r = rmax * std::cbrt(urad(rng));
    out.push_back(geo::h3_exp(geo::h3_origin(), geo::scale4(d, 1.0 / std::max(n, 1e-12)), r));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig
// ---------------------------------------------------------------------------

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> keys,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || (it.key() == k);
    if (!known)
      throw std::invalid_argument("config: unknown key '" + it.key() + "' in " + where);
  }
}

QuadratureSpec quad_from_json(const json& j) {
  reject_unknown(j,
                 {"gauss_order", "panel_count", "line_cutoff", "p_cutoff_low", "p_cutoff_high",
                  "fd_step", "grid_T", "grid_N"},
                 "quadrature");
  QuadratureSpec q;
  if (j.contains("gauss_order")) q.gauss_order = j.at("gauss_order").get<int>();
  if (j.contains("panel_count")) q.panel_count = j.at("panel_count").get<int>();
  if (j.contains("line_cutoff")) q.line_cutoff = j.at("line_cutoff").get<double>();
  if (j.contains("p_cutoff_low")) q.p_cutoff_low = j.at("p_cutoff_low").get<double>();
  if (j.contains("p_cutoff_high")) q.p_cutoff_high = j.at("p_cutoff_high").get<double>();
  if (j.contains("fd_step")) q.fd_step = j.at("fd_step").get<double>();
  if (j.contains("grid_T")) q.grid_T = j.at("grid_T").get<double>();
  if (j.contains("grid_N")) q.grid_N = j.at("grid_N").get<int>();
  q.validate();
  return q;
}

PhantomSpec phantom_from_json(const json& j, std::array<double, 4>& center) {
  reject_unknown(
      j, {"kind", "width", "width2", "amplitude", "support_radius", "ring_radius", "center"},
      "phantom");
  PhantomSpec p;
  if (j.contains("kind")) p.kind = PhantomSpec::kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("width")) p.width = j.at("width").get<double>();
  if (j.contains("width2")) p.width2 = j.at("width2").get<double>();
  if (j.contains("amplitude")) p.amplitude = j.at("amplitude").get<double>();
  if (j.contains("support_radius")) p.support_radius = j.at("support_radius").get<double>();
  if (j.contains("ring_radius")) p.ring_radius = j.at("ring_radius").get<double>();
  if (j.contains("center")) {
    const auto arr = j.at("center");
    if (!arr.is_array() || arr.size() > 4)
      throw std::invalid_argument("config: phantom.center must be an array of <= 4 numbers");
    for (size_t i = 0; i < arr.size(); ++i) center[i] = arr[i].get<double>();
  }
  p.validate();
  return p;
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  json j = json::parse(text);
  reject_unknown(j, {"quadrature", "phantom", "R", "probe_count", "seed", "out", "jobs"},
                 "top level");
  RunConfig cfg;
  if (j.contains("quadrature")) cfg.quad = quad_from_json(j.at("quadrature"));
  if (j.contains("phantom")) cfg.phantom = phantom_from_json(j.at("phantom"), cfg.center);
  if (j.contains("R")) cfg.R = j.at("R").get<double>();
  if (j.contains("probe_count")) cfg.probe_count = j.at("probe_count").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
  if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
  return cfg;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read config file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return from_json(ss.str());
}

SpectralSetup make_setup(const QuadratureSpec& spec, const FrozenConstants& c) {
  return SpectralSetup(spec, c.kappa);
}

// ---------------------------------------------------------------------------
// Calibration
// ---------------------------------------------------------------------------

namespace {

PhantomSpec gaussian_spec(double width, double amp = 1.0) {
  PhantomSpec p;
  p.kind = PhantomSpec::Kind::GaussianOfDistance;
  p.width = width;
  p.amplitude = amp;
  return p;
}

PhantomSpec bump_spec(double radius, double amp = 1.0) {
  PhantomSpec p;
  p.kind = PhantomSpec::Kind::CompactBump;
  p.support_radius = radius;
  p.amplitude = amp;
  return p;
}

double calibrate_kappa(const QuadratureSpec& spec) {
  const geo::DiskField f = geo::phantom_disk(gaussian_spec(0.75), HypPoint());
  SpectralSetup setup(spec, 1.0);  // unit kappa: ratio below is the true kappa
  const hf::PlancherelTriple pl = hf::plancherel_check(f, spec, setup);
  return pl.lhs / pl.rhs * setup.kappa;
}

double calibrate_c_d_3_2(const QuadratureSpec& spec) {
  const geo::EuclidField f = geo::phantom_euclid(gaussian_spec(1.0), 3, geo::EuclidPoint{{0, 0, 0}, 3});
  const euclid::SinogramOracle sino = euclid::make_sinogram(f, 2, spec);
  const auto r = euclid::invert_dplane(sino, geo::EuclidPoint{{0, 0, 0}, 3}, 1.0, spec);
  return 1.0 / r.value;  // f(o) = 1
}

double calibrate_C_d_3_2(const QuadratureSpec& spec) {
  const geo::H3Field f = geo::phantom_h3(gaussian_spec(1.0), geo::h3_origin());
  const hyp::H3PlaneSinogram sino = hyp::make_plane_sinogram(f, spec);
  const auto r = hyp::invert_hyp_tg(sino, geo::h3_origin(), 1.0, spec);
  return 1.0 / r.value;
}

// Solve for the exponent a in d mu = e^{a t} dt dtheta/2pi balancing the
// duality pairing on a family of t-localized test functions.
double calibrate_mu_exponent(const QuadratureSpec& spec) {
  const geo::DiskField f = geo::phantom_disk(gaussian_spec(0.8), HypPoint());
  const horo::HorocycleSinogram psi = horo::forward_sinogram(f, spec, kJ);
  const std::vector<double> centers{-1.2, -0.6, 0.0, 0.6, 1.2};
  const double s = 0.35;

  std::vector<double> lhs(centers.size());
  for (size_t m = 0; m < centers.size(); ++m) {
    const double tm = centers[m];
    auto phi = [&](const geo::Horocycle& xi) {
      const double u = (xi.t - tm) / s;
      return std::exp(-u * u);
    };
    auto integrand = [&](const HypPoint& z) { return f(z) * horo::horocycle_dual(phi, z, kJ); };
    lhs[m] = geo::disk_integral(integrand, f.decay.cutoff_radius(), spec, kJ);
  }

  auto rhs = [&](double a, size_t m) {
    const double tm = centers[m];
    double acc = 0.0;
    for (int k = 0; k < psi.N; ++k) {
      const double t = psi.t_at(k);
      const double u = (t - tm) / s;
      if (std::abs(u) > 9.0) continue;
      double row = 0.0;
      for (int j = 0; j < psi.J; ++j) row += psi.at(k, j);
      acc += std::exp(-u * u) * std::exp(a * t) * (row / psi.J) * psi.dt();
    }
    return acc;
  };
  auto sse = [&](double a) {
    double e = 0.0;
    for (size_t m = 0; m < centers.size(); ++m) {
      const double d = rhs(a, m) - lhs[m];
      e += d * d;
    }
    return e;
  };
  // golden-section minimize on [-2, 2.5]
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = -2.0, hi = 2.5;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = sse(x1), f2 = sse(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = sse(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = sse(x2);
    }
  }
  return 0.5 * (lo + hi);
}

struct RangeResolution {
  double kappa0 = 0.5;
  double mu = 2.0;
};

RangeResolution calibrate_range_law(const QuadratureSpec& spec) {
  PhantomSpec ps = bump_spec(0.6);
  const HypPoint center(std::tanh(0.5 * 0.7));
  const geo::DiskField f = geo::phantom_disk(ps, center);
  const horo::HorocycleSinogram psi = horo::forward_sinogram(f, spec, kJ);
  const horo::RangeCoefficients rc = horo::range_coefficients(psi);

  auto evenness = [&](double kappa0) {
    const auto col = rc.column(0);
    double worst = 0.0, scale = 0.0;
    for (int k = 1; k < rc.N; ++k) {
      const double t = -rc.T + (2.0 * rc.T / rc.N) * k;
      const horo::cplx a = col[k] * std::exp(kappa0 * t);
      const horo::cplx b = col[rc.N - k] * std::exp(-kappa0 * t);
      worst = std::max(worst, std::abs(a - b));
      scale = std::max(scale, std::abs(a));
    }
    return (scale > 0) ? worst / scale : worst;
  };

  RangeResolution best;
  double best_score = 1e300;
  for (double kappa0 : {0.5, 1.0}) {
    for (double mu : {1.0, 2.0}) {
      const auto chk = horo::range_multiplier_check(rc, 1, kappa0, mu);
      const double score = chk.residual + evenness(kappa0);
      if (score < best_score) {
        best_score = score;
        best = RangeResolution{kappa0, mu};
      }
    }
  }
  return best;
}

}  // namespace

FrozenConstants calibrate(const QuadratureSpec& spec) {
  FrozenConstants c;
  c.kappa = calibrate_kappa(spec);
  c.c_d_3_2 = calibrate_c_d_3_2(spec);
  c.C_d_3_2 = calibrate_C_d_3_2(spec);
  c.horocycle_mu_exponent = calibrate_mu_exponent(spec);
  const RangeResolution rr = calibrate_range_law(spec);
  c.range_kappa0 = rr.kappa0;
  c.range_mu = rr.mu;
  return c;
}

Report calibrate_report(const FrozenConstants& c) {
  Report rep;
  auto row = [&](const std::string& id, const std::string& anchor, double v) {
    rep.add(ReportRow::compare("calibrate_" + id, anchor, v, v, 0.0));
  };
  row("kappa", "Eq 8.2", c.kappa);
  row("c_d_3_2", "Eq 3.3", c.c_d_3_2);
  row("C_d_3_2", "Eq 4.1", c.C_d_3_2);
  row("horocycle_mu_exponent", "Eq 2.4", c.horocycle_mu_exponent);
  row("range_kappa0", "Thm 6.3", c.range_kappa0);
  row("range_mu", "Thm 6.3", c.range_mu);
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 1 + 2: Euclidean inversions
// ---------------------------------------------------------------------------

Report check_euclid_invert(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  const int nprobe = cfg.probe_count > 0 ? cfg.probe_count : 25;

  {  // R^2 X-ray (d = 1)
    Timer tm;
    const geo::EuclidField f = geo::phantom_euclid(gaussian_spec(1.0), 2, geo::EuclidPoint{});
    const auto sino = euclid::make_sinogram(f, 1, spec);
    const auto probes = euclid_probes(nprobe, 2, 1.1, cfg.seed);
    std::vector<double> errs(probes.size());
    num::parallel_for(static_cast<int>(probes.size()), cfg.jobs, [&](int i) {
      const auto r = euclid::invert_xray(sino, probes[i], spec);
      errs[i] = std::abs(r.value - f(probes[i]));
    });
    const double worst = *std::max_element(errs.begin(), errs.end());
    rep.add(ReportRow::residual("euclid_xray_r2_roundtrip", "Eq 3.4", worst, 1e-3)
                .with_runtime(tm.ms()));
    rep.add(ReportRow::residual("euclid_xray_r2_runtime_s", "Eq 3.4", tm.ms() / 1000.0, 60.0));
  }

  {  // R^3 X-ray (d = 1)
    Timer tm;
    const geo::EuclidField f =
        geo::phantom_euclid(gaussian_spec(1.0), 3, geo::EuclidPoint{{0, 0, 0}, 3});
    const auto sino = euclid::make_sinogram(f, 1, spec);
    const auto probes = euclid_probes(nprobe, 3, 1.1, cfg.seed + 1);
    std::vector<double> errs(probes.size());
    num::parallel_for(static_cast<int>(probes.size()), cfg.jobs, [&](int i) {
      const auto r = euclid::invert_xray(sino, probes[i], spec);
      errs[i] = std::abs(r.value - f(probes[i]));
    });
    const double worst = *std::max_element(errs.begin(), errs.end());
    rep.add(ReportRow::residual("euclid_xray_r3_roundtrip", "Eq 3.4", worst, 1e-3)
                .with_runtime(tm.ms()));
    rep.add(ReportRow::residual("euclid_xray_r3_runtime_s", "Eq 3.4", tm.ms() / 1000.0, 60.0));
  }

  {  // (n,d) = (3,2) with the frozen constant
    Timer tm;
    const geo::EuclidField f =
        geo::phantom_euclid(gaussian_spec(1.0), 3, geo::EuclidPoint{{0, 0, 0}, 3});
    const auto sino = euclid::make_sinogram(f, 2, spec);
    const auto probes = euclid_probes(5, 3, 0.8, cfg.seed + 2);
    std::vector<double> errs(probes.size());
    num::parallel_for(static_cast<int>(probes.size()), cfg.jobs, [&](int i) {
      const auto r = euclid::invert_dplane(sino, probes[i], c.c_d_3_2, spec);
      errs[i] = std::abs(r.value - f(probes[i]));
    });
    const double worst = *std::max_element(errs.begin(), errs.end());
    rep.add(ReportRow::residual("euclid_dplane_32_roundtrip", "Eq 3.3", worst, 5e-3)
                .with_runtime(tm.ms()));

    // cross-phantom constancy of the calibrated c(2)
    double spread = 0.0;
    for (double w : {0.8, 1.3}) {
      const geo::EuclidField g =
          geo::phantom_euclid(gaussian_spec(w), 3, geo::EuclidPoint{{0, 0, 0}, 3});
      const auto s2 = euclid::make_sinogram(g, 2, spec);
      const auto r = euclid::invert_dplane(s2, geo::EuclidPoint{{0, 0, 0}, 3}, 1.0, spec);
      const double c2 = g(geo::EuclidPoint{{0, 0, 0}, 3}) / r.value;
      spread = std::max(spread, std::abs(c2 - c.c_d_3_2) / std::abs(c.c_d_3_2));
    }
    rep.add(ReportRow::residual("euclid_c2_cross_phantom", "Eq 3.3", spread, 1e-3));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 3: hyperbolic inversions
// ---------------------------------------------------------------------------

Report check_hyp_invert(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  const int nprobe = cfg.probe_count > 0 ? cfg.probe_count : 20;

  {  // H^2 geodesics
    Timer tm;
    const geo::DiskField f = geo::phantom_disk(gaussian_spec(1.0), HypPoint());
    const auto sino = hyp::make_sinogram(f, spec);
    const auto probes = disk_probes(nprobe, 1.2, cfg.seed);
    std::vector<double> errs(probes.size());
    num::parallel_for(static_cast<int>(probes.size()), cfg.jobs, [&](int i) {
      const auto r = hyp::invert_hyp_xray(sino, probes[i], spec);
      errs[i] = std::abs(r.value - f(probes[i]));
    });
    const double worst = *std::max_element(errs.begin(), errs.end());
    rep.add(ReportRow::residual("hyp_xray_h2_roundtrip", "Eq 4.2", worst, 5e-3)
                .with_runtime(tm.ms()));
  }

  {  // H^3 geodesics
    Timer tm;
    const geo::H3Field f = geo::phantom_h3(gaussian_spec(1.0), geo::h3_origin());
    const auto sino = hyp::make_geodesic_sinogram(f, spec);
    const auto probes = h3_probes(nprobe, 1.0, cfg.seed + 1);
    std::vector<double> errs(probes.size());
    num::parallel_for(static_cast<int>(probes.size()), cfg.jobs, [&](int i) {
      const auto r = hyp::invert_hyp_xray(sino, probes[i], spec);
      errs[i] = std::abs(r.value - f(probes[i]));
    });
    const double worst = *std::max_element(errs.begin(), errs.end());
    rep.add(ReportRow::residual("hyp_xray_h3_roundtrip", "Eq 4.2", worst, 5e-3)
                .with_runtime(tm.ms()));
  }

  {  // H^3 totally geodesic planes with the frozen constant
    Timer tm;
    const geo::H3Field f = geo::phantom_h3(gaussian_spec(1.0), geo::h3_origin());
    const auto sino = hyp::make_plane_sinogram(f, spec);
    const auto probes = h3_probes(5, 0.8, cfg.seed + 2);
    std::vector<double> errs(probes.size());
    num::parallel_for(static_cast<int>(probes.size()), cfg.jobs, [&](int i) {
      const auto r = hyp::invert_hyp_tg(sino, probes[i], c.C_d_3_2, spec);
      errs[i] = std::abs(r.value - f(probes[i]));
    });
    const double worst = *std::max_element(errs.begin(), errs.end());
    rep.add(ReportRow::residual("hyp_tg_32_roundtrip", "Eq 4.1", worst, 1e-2)
                .with_runtime(tm.ms()));

    double spread = 0.0;
    for (double w : {0.85, 1.25}) {
      const geo::H3Field g = geo::phantom_h3(gaussian_spec(w), geo::h3_origin());
      const auto s2 = hyp::make_plane_sinogram(g, spec);
      const auto r = hyp::invert_hyp_tg(s2, geo::h3_origin(), 1.0, spec);
      const double C2 = g(geo::h3_origin()) / r.value;
      spread = std::max(spread, std::abs(C2 - c.C_d_3_2) / std::abs(c.C_d_3_2));
    }
    rep.add(ReportRow::residual("hyp_C2_cross_phantom", "Eq 4.1", spread, 1e-3));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 4: the rank-two product inversion
// ---------------------------------------------------------------------------

Report check_product_invert(const RunConfig& cfg, const FrozenConstants&) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;

  {  // separable Gaussian
    Timer tm;
    PhantomSpec ps;
    ps.kind = PhantomSpec::Kind::SeparableProduct;
    ps.width = 1.0;
    ps.width2 = 1.2;
    const geo::ProductField f = geo::phantom_product(ps, geo::ProductPoint{});
    const auto r = prod::invert_product_xray(f, spec, 16);
    rep.add(ReportRow::compare("product_xray_separable", "Eq 5.2 / Thm 5.1", r.value, 1.0, 1e-2)
                .with_runtime(tm.ms()));
    rep.add(ReportRow::residual("product_xray_separable_runtime_s", "Thm 5.1", tm.ms() / 1000.0,
                                300.0));
  }

  {  // compact bump
    Timer tm;
    const geo::ProductField f = geo::phantom_product(bump_spec(1.5), geo::ProductPoint{});
    const auto r = prod::invert_product_xray(f, spec, 16);
    rep.add(ReportRow::compare("product_xray_bump", "Eq 5.2 / Thm 5.1", r.value, 1.0, 1e-2)
                .with_runtime(tm.ms()));
    rep.add(
        ReportRow::residual("product_xray_bump_runtime_s", "Thm 5.1", tm.ms() / 1000.0, 300.0));
  }

  {  // translated bump reconstructed at its center by pre-composition
    Timer tm;
    geo::ProductPoint center;
    center.z1 = HypPoint(std::tanh(0.5 * 0.5));
    center.z2 = HypPoint(std::tanh(0.5 * 0.4) * geo::cplx(0.0, 1.0));
    const geo::ProductField f = geo::phantom_product(bump_spec(1.2), center);
    const geo::Mobius g1 = geo::Mobius::translate(center.z1.z);
    const geo::Mobius g2 = geo::Mobius::translate(center.z2.z);
    geo::ProductField fog;
    fog.decay = num::Decay::compact(1.2, 0.0);
    fog.f = [f, g1, g2](const geo::ProductPoint& p) {
      geo::ProductPoint q;
      q.z1 = HypPoint(g1.apply(p.z1.z));
      q.z2 = HypPoint(g2.apply(p.z2.z));
      return f(q);
    };
    const auto r = prod::invert_product_xray(fog, spec, 16);
    rep.add(
        ReportRow::compare("product_xray_translated", "Eq 5.2 / Thm 5.1", r.value, 1.0, 1e-2)
            .with_runtime(tm.ms()));
    rep.add(ReportRow::residual("product_xray_translated_runtime_s", "Thm 5.1",
                                tm.ms() / 1000.0, 300.0));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 5: horocycle duality, inversion, Plancherel
// ---------------------------------------------------------------------------

Report check_horocycle_roundtrip(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  const SpectralSetup setup = make_setup(spec, c);

  {  // duality with the measured Xi-measure exponent
    Timer tm;
    const geo::DiskField f = geo::phantom_disk(gaussian_spec(0.8), HypPoint());
    auto phi = [](const geo::Horocycle& xi) {
      return std::exp(-xi.t * xi.t) * (1.0 + 0.3 * std::cos(xi.theta));
    };
    auto integrand = [&](const HypPoint& z) { return f(z) * horo::horocycle_dual(phi, z, kJ); };
    const double lhs = geo::disk_integral(integrand, f.decay.cutoff_radius(), spec, kJ);

    const horo::HorocycleSinogram psi = horo::forward_sinogram(f, spec, kJ);
    const double a = c.horocycle_mu_exponent;
    double rhs = 0.0;
    for (int k = 0; k < psi.N; ++k) {
      const double t = psi.t_at(k);
      if (std::abs(t) > 12.0) continue;
      double row = 0.0;
      for (int j = 0; j < psi.J; ++j)
        row += psi.at(k, j) * phi(geo::Horocycle{t, psi.theta_at(j)});
      rhs += (row / psi.J) * std::exp(a * t) * psi.dt();
    }
    rep.add(ReportRow::compare("horocycle_duality", "Eq 2.4", rhs, lhs,
                               1e-6 * std::abs(lhs))
                .with_runtime(tm.ms()));
  }

  {  // Lambda-inversion round trip at 10 points
    Timer tm;
    const geo::DiskField f = geo::phantom_disk(gaussian_spec(0.8), HypPoint());
    const horo::HorocycleSinogram psi = horo::forward_sinogram(f, spec, kJ);
    const horo::LambdaInverter inv(psi, setup);
    double worst = 0.0;
    for (const auto& z : disk_probes(10, 1.2, cfg.seed)) {
      worst = std::max(worst, std::abs(inv(z) - f(z)));
    }
    rep.add(
        ReportRow::residual("horocycle_lambda_roundtrip", "Eq 6.2", worst, 1e-2)
            .with_runtime(tm.ms()));
  }

  {  // Plancherel ratio phantom-independent over five phantoms
    Timer tm;
    std::vector<geo::DiskField> phantoms;
    phantoms.push_back(geo::phantom_disk(bump_spec(1.0), HypPoint()));
    phantoms.push_back(geo::phantom_disk(bump_spec(1.6), HypPoint()));
    phantoms.push_back(geo::phantom_disk(bump_spec(2.2, 0.7), HypPoint()));
    phantoms.push_back(geo::phantom_disk(bump_spec(1.0), HypPoint(std::tanh(0.25))));
    {
      PhantomSpec tb = bump_spec(0.8, 1.3);
      tb.kind = PhantomSpec::Kind::TranslatedBump;
      phantoms.push_back(
          geo::phantom_disk(tb, HypPoint(std::tanh(0.45) * geo::cplx(0.6, 0.8))));
    }
    std::vector<double> ratios;
    for (const auto& f : phantoms)
      ratios.push_back(horo::plancherel_horocycle(f, spec, setup, kJ).ratio);
    double spread = 0.0;
    for (double r : ratios) spread = std::max(spread, std::abs(r - ratios[0]) / ratios[0]);
    rep.add(ReportRow::residual("horocycle_plancherel_spread", "Eq 6.3", spread, 1e-3)
                .with_runtime(tm.ms()));
    rep.add(ReportRow::compare("horocycle_plancherel_ratio", "Eq 6.3", ratios[0], 1.0, 1e-3));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 6: the range law
// ---------------------------------------------------------------------------

Report check_horocycle_range(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  (void)cfg;

  PhantomSpec ps = bump_spec(0.6);
  ps.kind = PhantomSpec::Kind::TranslatedBump;
  const geo::DiskField f = geo::phantom_disk(ps, HypPoint(std::tanh(0.5 * 0.7)));
  const horo::HorocycleSinogram psi = horo::forward_sinogram(f, spec, kJ);
  const horo::RangeCoefficients rc = horo::range_coefficients(psi);

  for (int n = 1; n <= 3; ++n) {
    Timer tm;
    const auto chk = horo::range_multiplier_check(rc, n, c.range_kappa0, c.range_mu);
    rep.add(ReportRow::residual("range_multiplier_n" + std::to_string(n), "Thm 6.3",
                                chk.residual, 1e-2)
                .with_runtime(tm.ms()));
  }

  {  // negative control: an even perturbation of psi_1 must inflate the residual
    const auto base = horo::range_multiplier_check(rc, 1, c.range_kappa0, c.range_mu);
    horo::RangeCoefficients pert = rc;
    double m1 = 0.0;
    for (int k = 0; k < rc.N; ++k) m1 = std::max(m1, std::abs(rc.coef(k, 1)));
    for (int k = 0; k < rc.N; ++k) {
      const double t = -rc.T + (2.0 * rc.T / rc.N) * k;
      pert.c[static_cast<size_t>(k) * rc.J + 1] += 0.1 * m1 * std::exp(-t * t);
    }
    const auto chk = horo::range_multiplier_check(pert, 1, c.range_kappa0, c.range_mu);
    rep.add(threshold_row("range_negative_control_inflation", "Thm 6.3",
                          chk.residual / std::max(base.residual, 1e-300), 10.0));
  }

  {  // |shat_n| = 1 on the real grid
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n)
      for (int j = 0; j < spec.grid_N; ++j) {
        const double lambda = num::Multiplier::bin_lambda(j, spec.grid_N, spec.grid_T);
        worst = std::max(worst, std::abs(std::abs(horo::s_hat(n, lambda, c.range_mu)) - 1.0));
      }
    rep.add(ReportRow::residual("range_shat_unit_modulus", "Thm 6.3", worst, 1e-12));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 7: support theorem harness
// ---------------------------------------------------------------------------

Report check_support_scan(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  const SpectralSetup setup = make_setup(spec, c);

  {
    Timer tm;
    geo::HypPoint center;
    if (cfg.center[0] != 0.0 || cfg.center[1] != 0.0)
      center = HypPoint(geo::cplx(cfg.center[0], cfg.center[1]));
    const geo::DiskField f = geo::phantom_disk(cfg.phantom, center);
    const auto rep7 = horo::support_scan(f, cfg.R, spec, setup, kJ);
    rep.add(ReportRow::residual("support_external_sup", "Thm 6.1 / Cor 6.6", rep7.external_sup,
                                1e-8)
                .with_runtime(tm.ms()));
    rep.add(ReportRow::residual("support_enclosing_sup", "Thm 6.5 / Cor 6.6",
                                rep7.enclosing_sup, 1e-8));
    rep.add(ReportRow::residual("support_outside_reconstruction", "Thm 6.1",
                                rep7.outside_sup, 1e-3));
    rep.add(threshold_row("support_thm65_implication", "Thm 6.5",
                          rep7.one_sided_implication ? 1.0 : 0.0, 1.0));
  }

  {  // negative control: off-center phantom with R too small
    Timer tm;
    const geo::DiskField g =
        geo::phantom_disk(bump_spec(1.0), HypPoint(std::tanh(0.5 * 2.0)));
    const auto neg = horo::support_scan(g, 1.0, spec, setup, kJ);
    rep.add(ReportRow::residual("support_external_sup_offcenter", "Thm 6.1", neg.external_sup,
                                1e-8)
                .expect_fail()
                .with_runtime(tm.ms()));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 8: Abel identities
// ---------------------------------------------------------------------------

Report check_abel_identities(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  const SpectralSetup setup = make_setup(spec, c);
  (void)cfg;

  const abel::RadialField f0 = abel::radial_phantom(gaussian_spec(1.0));
  const num::EvenGridFunction Af0 = abel::abel_forward_grid(f0, spec);

  {  // intertwining: (A f)^* = ftilde on the lambda band
    Timer tm;
    std::vector<double> lambdas;
    for (double l = 0.0; l <= kLambdaMax + 1e-12; l += kDLambda) lambdas.push_back(l);
    const std::vector<double> ft = abel::spherical_transform_grid(f0, lambdas, spec);
    double worst = 0.0, scale = 0.0;
    for (size_t i = 0; i < lambdas.size(); ++i) {
      const double lhs = Af0.fourier_at(lambdas[i]).real();
      worst = std::max(worst, std::abs(lhs - ft[i]));
      scale = std::max(scale, std::abs(ft[i]));
    }
    rep.add(ReportRow::residual("abel_intertwining", "Eq 7.6", worst / scale, 1e-4)
                .with_runtime(tm.ms()));
  }

  const abel::RadialField f2 = abel::radial_phantom(gaussian_spec(0.8));
  // convolution field via the brute-force oracle
  abel::RadialField conv;
  conv.decay = num::Decay::gaussian(1.0 / (1.0 * 1.0 + 0.8 * 0.8), 4.0, 0.0);
  conv.f = [f0, f2, &spec](double r) {
    return abel::radial_convolution(f0, f2, HypPoint(std::tanh(0.5 * r)), spec);
  };

  {  // homomorphism (f1 x f2)~ = f1~ f2~
    Timer tm;
    double worst = 0.0;
    for (double l : {0.5, 1.0, 2.0, 4.0}) {
      const double lhs = abel::spherical_transform(conv, abel::cplx(l, 0.0), spec).real();
      const double rhs = abel::spherical_transform(f0, abel::cplx(l, 0.0), spec).real() *
                         abel::spherical_transform(f2, abel::cplx(l, 0.0), spec).real();
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    rep.add(ReportRow::residual("abel_homomorphism", "Eq 7.5", worst, 1e-3)
                .with_runtime(tm.ms()));
  }

  {  // A(f1 x f2) = A f1 * A f2
    Timer tm;
    const num::EvenGridFunction Af2 = abel::abel_forward_grid(f2, spec);
    const num::EvenGridFunction rhs = num::grid_convolution(Af0, Af2);
    double worst = 0.0, scale = 0.0;
    for (double t : {0.0, 0.5, 1.0, 1.7}) {
      const double lhs = abel::abel_forward(conv, t, spec);
      worst = std::max(worst, std::abs(lhs - rhs.interp(t)));
      scale = std::max(scale, std::abs(lhs));
    }
    rep.add(ReportRow::residual("abel_convolution", "Eq 7.7", worst / scale, 1e-3)
                .with_runtime(tm.ms()));
  }

  {  // Theorem 7.1
    Timer tm;
    num::EvenGridFunction psi(spec.grid_T, spec.grid_N, true);
    psi.fill([](double t) { return std::cos(0.7 * t) * std::exp(-(t / 6.0) * (t / 6.0)); });
    const auto t71 = abel::check_theorem71(Af0, psi, f0, f0.decay, {0.0, 0.4, 0.9, 1.5}, setup);
    rep.add(ReportRow::residual("thm71_residual1", "Thm 7.1", t71.residual1, 1e-3)
                .with_runtime(tm.ms()));
    rep.add(ReportRow::residual("thm71_residual2", "Eq 7.12", t71.residual2, 1e-2));
  }

  {  // Corollary 7.2 round trip
    Timer tm;
    const abel::RadialField rec = abel::abel_invert(Af0, setup);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double r = 2.5 * i / 19.0;
      worst = std::max(worst, std::abs(rec(r) - f0(r)));
    }
    rep.add(ReportRow::residual("abel_inversion_roundtrip", "Cor 7.2", worst, 1e-3)
                .with_runtime(tm.ms()));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 9: Fourier suite
// ---------------------------------------------------------------------------

Report check_fourier_plancherel(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  const SpectralSetup setup = make_setup(spec, c);

  {  // Plancherel with the shared frozen kappa, two non-calibration phantoms
    Timer tm;
    const geo::DiskField fa = geo::phantom_disk(bump_spec(2.0), HypPoint());
    const geo::DiskField fb = geo::phantom_disk(gaussian_spec(0.9), HypPoint());
    const auto pa = hf::plancherel_check(fa, spec, setup);
    const auto pb = hf::plancherel_check(fb, spec, setup);
    rep.add(ReportRow::compare("fourier_plancherel_bump", "Eq 8.2", pa.ratio, 1.0, 1e-3)
                .with_runtime(tm.ms()));
    rep.add(ReportRow::compare("fourier_plancherel_gaussian", "Eq 8.2", pb.ratio, 1.0, 1e-3));
  }

  {  // inversion round trip at 20 points
    Timer tm;
    const geo::DiskField f = geo::phantom_disk(gaussian_spec(0.9), HypPoint());
    const hf::SpectralGrid F = hf::forward_grid(f, spec, kLambdaMax, kDLambda, kJ);
    double worst = 0.0;
    for (const auto& z : disk_probes(20, 1.2, cfg.seed)) {
      const auto r = hf::hfourier_invert(F, z, setup);
      worst = std::max(worst, std::abs(r.value - f(z)));
    }
    rep.add(ReportRow::residual("fourier_inversion_roundtrip", "Eq 8.1", worst, 1e-3)
                .with_runtime(tm.ms()));
  }

  {  // Poisson transform eigenfunction residual
    Timer tm;
    const double lambda = 0.8;
    auto F = [](double th) { return hf::cplx(1.0 + 0.5 * std::cos(th), 0.0); };
    auto u = [&](const HypPoint& z) {
      return hf::poisson_transform(F, abel::cplx(lambda, 0.0), z, 256);
    };
    double worst = 0.0;
    const double h = 1e-3;
    for (const auto& z : disk_probes(6, 0.9, cfg.seed + 3)) {
      const geo::cplx z0 = z.z;
      const hf::cplx lap_flat =
          (u(HypPoint(z0 + h)) + u(HypPoint(z0 - h)) + u(HypPoint(z0 + geo::cplx(0, h))) +
           u(HypPoint(z0 - geo::cplx(0, h))) - 4.0 * u(z)) /
          (h * h);
      const double conf = 0.25 * (1.0 - std::norm(z0)) * (1.0 - std::norm(z0));
      const hf::cplx lap = conf * lap_flat;
      const hf::cplx expect = -(lambda * lambda + 0.25) * u(z);
      worst = std::max(worst, std::abs(lap - expect) / std::abs(expect));
    }
    rep.add(ReportRow::residual("poisson_eigenfunction", "Eq 9.1", worst, 1e-4)
                .with_runtime(tm.ms()));
  }
  return rep;
}

Report check_rl_scan(const RunConfig& cfg, const FrozenConstants&) {
  Report rep;
  const QuadratureSpec& spec = cfg.quad;
  (void)cfg;

  // rough integrable phantom: indicator of the unit ball
  geo::DiskField ind;
  ind.decay = num::Decay::compact(1.0);
  ind.f = [](const HypPoint& z) {
    return geo::hyp_distance(HypPoint(), z) < 1.0 ? 1.0 : 0.0;
  };

  {
    Timer tm;
    const std::vector<double> xis{1.0, 40.0};
    const std::vector<double> etas{-0.5, -0.25, 0.0, 0.25, 0.5};
    std::vector<double> thetas;
    for (int j = 0; j < 8; ++j) thetas.push_back(2.0 * kPi * j / 8);
    const auto rows = hf::riemann_lebesgue_scan(ind, xis, etas, thetas, spec);
    const double ratio = rows[1].sup_abs / rows[0].sup_abs;
    rep.add(ReportRow::residual("rl_rough_decay_ratio", "Thm 8.1", ratio, 0.1)
                .with_runtime(tm.ms()));
  }

  {  // tube bound  Int_B |ftilde| db <= ||f||_1 at 5 tube points
    Timer tm;
    const std::vector<hf::cplx> pts{{1.0, 0.5}, {3.0, -0.25}, {5.0, 0.0}, {10.0, 0.5},
                                    {20.0, -0.5}};
    double worst = -1e300;
    for (const auto& l : pts) {
      const auto pr = hf::l1_bound_pair(ind, l, spec);
      worst = std::max(worst, pr.first - pr.second);  // must be <= 0
    }
    rep.add(ReportRow::residual("rl_l1_tube_bound_slack", "Eq 8.4", std::max(worst, 0.0), 0.0)
                .with_runtime(tm.ms()));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 10: oracle hygiene
// ---------------------------------------------------------------------------

Report check_oracle_hygiene(const RunConfig& cfg, const FrozenConstants&) {
  Report rep;
  (void)cfg;

  {  // c-density cutoff independence
    Timer tm;
    const num::CFunction near(18.0), far(22.0);
    double worst = 0.0;
    for (double l : {0.5, 1.0, 2.0, 5.0}) {
      const double a = near.density_raw(l), b = far.density_raw(l);
      worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    rep.add(ReportRow::residual("c_density_cutoff_independence", "Eq 7.11", worst, 1e-6)
                .with_runtime(tm.ms()));
  }

  {  // quadrature refinement orders
    auto ref = [](double (*g)(double), int order) {
      return num::panel_gauss([&](double s) { return g(s); }, -6.0, 6.0, order, 2);
    };
    auto g = [](double s) { return std::exp(-s * s) * std::cos(6.0 * s); };
    const double exact = ref(g, 48);
    const double e1 = std::abs(ref(g, 8) - exact);
    const double e2 = std::abs(ref(g, 16) - exact);
    rep.add(threshold_row("gauss_order_refinement", "Eq 2.1", e1 / std::max(e2, 1e-300), 8.0));

    auto h = [](double th) { return std::exp(std::cos(th)) * std::cos(std::sin(th)); };
    const double c_exact = num::integrate_circle(h, 256);
    const double ce1 = std::abs(num::integrate_circle(h, 6) - c_exact);
    const double ce2 = std::abs(num::integrate_circle(h, 12) - c_exact);
    rep.add(threshold_row("circle_refinement", "Eq 7.3", ce1 / std::max(ce2, 1e-300), 8.0));

    auto F = [](double p) { return std::exp(-p * p) * std::cos(2.0 * p); };
    const double dref = -2.0 * 0.7 * std::exp(-0.49) * std::cos(1.4) -
                        2.0 * std::exp(-0.49) * std::sin(1.4);
    const double de1 = std::abs(num::d_dp(F, 0.7, 0.2).value - dref);
    const double de2 = std::abs(num::d_dp(F, 0.7, 0.1).value - dref);
    rep.add(threshold_row("fd_step_refinement", "Eq 3.4", de1 / std::max(de2, 1e-300), 8.0));
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report run_all(const RunConfig& cfg, const FrozenConstants& c) {
  Report rep;
  rep.append(check_euclid_invert(cfg, c));
  rep.append(check_hyp_invert(cfg, c));
  rep.append(check_product_invert(cfg, c));
  rep.append(check_horocycle_roundtrip(cfg, c));
  rep.append(check_horocycle_range(cfg, c));
  rep.append(check_support_scan(cfg, c));
  rep.append(check_abel_identities(cfg, c));
  rep.append(check_fourier_plancherel(cfg, c));
  rep.append(check_rl_scan(cfg, c));
  rep.append(check_oracle_hygiene(cfg, c));
  return rep;
}

}  // namespace igt::checks

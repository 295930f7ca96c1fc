#include "igt/cfunction.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace igt::num {

namespace {

// Busemann bracket toward theta = 0 at the radial point r = tanh(t/2):
//   A(theta) = log((1-r^2) / ((1-r)^2 + 4 r sin^2(theta/2)))
// evaluated through 1-r = 2/(e^t + 1) so that t up to ~25 stays accurate.
struct RadialBusemann {
  double one_minus_r, r, one_minus_r2;
  explicit RadialBusemann(double t) {
    one_minus_r = 2.0 / (std::exp(t) + 1.0);
    r = 1.0 - one_minus_r;
    one_minus_r2 = one_minus_r * (1.0 + r);
  }
  double operator()(double theta) const {
    const double s = std::sin(0.5 * theta);
    return std::log(one_minus_r2) - std::log(one_minus_r * one_minus_r + 4.0 * r * s * s);
  }
};

}  // namespace

PhiTable build_phi_table(double t, double lambda_max) {
  PhiTable tab;
  tab.t = t;
  const RadialBusemann A(t);
  const double w0 = std::max(A.one_minus_r, 1e-12);

  std::vector<double> edges;
  edges.push_back(0.0);
  double e = std::min(w0, kPi);
  while (e < kPi) {
    edges.push_back(e);
    e *= 2.0;
  }
  edges.push_back(kPi);

  // Within one octave the Busemann value moves by O(log 4); subdivide so that
  // the phase lambda*A advances at most ~12 rad per sub-panel.
  const int nsub = std::max(1, static_cast<int>(std::ceil(std::abs(lambda_max) * 1.4 / 12.0)));
  const GaussRule& rule = gauss_rule(16);

  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    const double h = (b - a) / nsub;
    for (int s = 0; s < nsub; ++s) {
      const double mid = a + (s + 0.5) * h;
      for (size_t k = 0; k < rule.x.size(); ++k) {
        const double theta = mid + 0.5 * h * rule.x[k];
        tab.A.push_back(A(theta));
        tab.w.push_back(0.5 * h * rule.w[k] / kPi);
      }
    }
  }
  return tab;
}

double phi_lambda(double lambda, const PhiTable& tab) {
  double acc = 0.0;
  for (size_t i = 0; i < tab.A.size(); ++i)
    acc += tab.w[i] * std::exp(0.5 * tab.A[i]) * std::cos(lambda * tab.A[i]);
  return acc;
}

cplx phi_lambda_c(cplx lambda, const PhiTable& tab) {
  cplx acc = 0.0;
  for (size_t i = 0; i < tab.A.size(); ++i)
    acc += tab.w[i] * std::exp((cplx(0.0, 1.0) * lambda + 0.5) * tab.A[i]);
  return acc;
}

namespace {

const PhiTable& cached_table(double t) {
  static std::map<double, PhiTable> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_phi_table(t, 40.0)).first;
  return it->second;
}

}  // namespace

double spherical_phi(double lambda, double t) {
  if (t == 0.0) return 1.0;
  return phi_lambda(lambda, cached_table(std::abs(t)));
}

cplx spherical_phi_c(cplx lambda, double t) {
  if (t == 0.0) return 1.0;
  return phi_lambda_c(lambda, cached_table(std::abs(t)));
}

CFunction::CFunction(double t_base) : t_base_(t_base) {
  // Three fit distances with an irrational spread so that the sine factors
  // sin(lambda * dt) of the pair determinants never vanish simultaneously on
  // a DFT dual grid.
  const double golden = 1.6180339887498949;
  fit_ts_ = {t_base_, t_base_ + 2.0, t_base_ + golden};
}

namespace {

// least-squares fit of u(t) = P cos(lambda t) + Q sin(lambda t); returns
// (|c|^2, model evaluations) with c = (P - iQ)/2.
struct WaveFit {
  double P = 0.0, Q = 0.0;
  double c2 = 0.0;
  bool ok = false;
};

WaveFit fit_wave(const std::vector<double>& ts, const std::vector<double>& us, double lambda) {
  WaveFit out;
  double scc = 0, scs = 0, sss = 0, bc = 0, bs = 0;
  for (size_t i = 0; i < ts.size(); ++i) {
    const double c = std::cos(lambda * ts[i]);
    const double s = std::sin(lambda * ts[i]);
    scc += c * c;
    scs += c * s;
    sss += s * s;
    bc += c * us[i];
    bs += s * us[i];
  }
  const double det = scc * sss - scs * scs;
  if (std::abs(det) < 1e-10) return out;
  out.P = (sss * bc - scs * bs) / det;
  out.Q = (scc * bs - scs * bc) / det;
  out.c2 = 0.25 * (out.P * out.P + out.Q * out.Q);
  out.ok = true;
  return out;
}

}  // namespace

double CFunction::fit_density(double lambda) const {
  if (tables_.empty()) {
    for (double t : fit_ts_) tables_.push_back(build_phi_table(t, 300.0));
  }
  std::vector<double> us(fit_ts_.size());
  for (size_t i = 0; i < fit_ts_.size(); ++i)
    us[i] = std::exp(0.5 * fit_ts_[i]) * phi_lambda(lambda, tables_[i]);
  const WaveFit fit = fit_wave(fit_ts_, us, lambda);
  if (!fit.ok || fit.c2 <= 0.0)
    throw std::runtime_error("CFunction: degenerate asymptotic fit at lambda=" +
                             std::to_string(lambda));
  return 1.0 / fit.c2;
}

double CFunction::fit_density_small(double lambda) const {
  // The two-wave system degenerates as lambda -> 0; the density vanishes
  // quadratically there, so extrapolate an even quadratic-in-lambda^2 model
  // from safely conditioned sample points (wider tolerance accepted).
  const double l1 = 0.06, l2 = 0.12;
  const double d1 = fit_density(l1), d2 = fit_density(l2);
  const double a = (d2 / (l2 * l2) - d1 / (l1 * l1)) / (l2 * l2 - l1 * l1);
  const double b = d1 / (l1 * l1) - a * l1 * l1;
  const double l2sq = lambda * lambda;
  return l2sq * (b + a * l2sq);
}

double CFunction::density_raw(double lambda) const {
  const double al = std::abs(lambda);
  if (al == 0.0) return 0.0;
  auto it = cache_.find(al);
  if (it != cache_.end()) return it->second;
  const double val = (al < 0.05) ? fit_density_small(al) : fit_density(al);
  cache_.emplace(al, val);
  return val;
}

double CFunction::fit_residual(double lambda) const {
  if (tables_.empty()) fit_density(std::max(std::abs(lambda), 0.06));
  std::vector<double> us(fit_ts_.size());
  for (size_t i = 0; i < fit_ts_.size(); ++i)
    us[i] = std::exp(0.5 * fit_ts_[i]) * phi_lambda(lambda, tables_[i]);
  const WaveFit fit = fit_wave(fit_ts_, us, lambda);
  if (!fit.ok) return 1.0;
  if (!res_table_) {
    const double t_res = t_base_ + 1.0;
    res_table_ = std::make_unique<PhiTable>(build_phi_table(t_res, 300.0));
  }
  const double u = std::exp(0.5 * res_table_->t) * phi_lambda(lambda, *res_table_);
  const double model =
      fit.P * std::cos(lambda * res_table_->t) + fit.Q * std::sin(lambda * res_table_->t);
  return std::abs(u - model) / std::max(std::abs(u), 1e-300);
}

const std::vector<double>& CFunction::density_bins(int N, double T) const {
  const auto key = std::make_pair(N, static_cast<int>(std::lround(T * 1024.0)));
  auto it = bin_cache_.find(key);
  if (it != bin_cache_.end()) return it->second;

  const double lambda_max = kPi / T * (N / 2);
  if (tables_.empty() || lambda_max > lambda_max_bins_) {
    tables_.clear();
    for (double t : fit_ts_) tables_.push_back(build_phi_table(t, std::max(lambda_max, 300.0)));
    const_cast<CFunction*>(this)->lambda_max_bins_ = std::max(lambda_max, 300.0);
  }

  // u(t_i, lambda_j) for all positive bins at once: each node contributes a
  // rotating phasor, advanced once per bin.
  const int half = N / 2;
  const double dl = kPi / T;
  std::vector<std::vector<double>> u(fit_ts_.size(), std::vector<double>(half + 1, 0.0));
  for (size_t ti = 0; ti < fit_ts_.size(); ++ti) {
    const PhiTable& tab = tables_[ti];
    const double pref = std::exp(0.5 * fit_ts_[ti]);
    for (size_t i = 0; i < tab.A.size(); ++i) {
      const double amp = pref * tab.w[i] * std::exp(0.5 * tab.A[i]);
      const cplx step(std::cos(dl * tab.A[i]), std::sin(dl * tab.A[i]));
      cplx ph(amp, 0.0);
      double* row = u[ti].data();
      for (int j = 0; j <= half; ++j) {
        row[j] += ph.real();
        ph *= step;
      }
    }
  }

  std::vector<double> bins(static_cast<size_t>(N), 0.0);
  std::vector<double> us(fit_ts_.size());
  for (int j = 1; j <= half; ++j) {
    const double lambda = dl * j;
    for (size_t ti = 0; ti < fit_ts_.size(); ++ti) us[ti] = u[ti][j];
    double dens;
    if (lambda < 0.05) {
      dens = fit_density_small(lambda);
    } else {
      const WaveFit fit = fit_wave(fit_ts_, us, lambda);
      dens = (fit.ok && fit.c2 > 0) ? 1.0 / fit.c2 : fit_density(lambda);
    }
    bins[j] = dens;
    if (j < half) bins[N - j] = dens;
  }
  bins[0] = 0.0;
  return bin_cache_.emplace(key, std::move(bins)).first->second;
}

}  // namespace igt::num

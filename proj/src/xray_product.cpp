#include "igt/xray_product.hpp"

#include <cmath>
#include <stdexcept>

namespace igt::prod {

using geo::FlatGeodesic;
using geo::ProductField;
using num::kPi;
using num::QuadratureSpec;

double product_xray_forward(const ProductField& f, const FlatGeodesic& g,
                            const QuadratureSpec& spec) {
  if (!f.decay.present())
    throw std::invalid_argument("product_xray_forward: decay metadata missing");
  // the curve is unit speed and d(o, g(0)) = p
  auto h = [&](double s) { return f(g.at(s)); };
  return num::integrate_line(h, f.decay, g.p, spec);
}

double omega_average(const std::function<double(const FlatGeodesic&)>& phi, double p, int M) {
  if (p < 0) throw std::invalid_argument("omega_average: p must be >= 0");
  if (M < 1) throw std::invalid_argument("omega_average: M must be positive");
  double acc = 0.0;
  for (int i = 0; i < M; ++i) {
    const double alpha = 2.0 * kPi * i / M;
    for (int j = 0; j < M; ++j) {
      const double beta = 2.0 * kPi * j / M;
      for (int k = 0; k < M; ++k) {
        const double ang = 2.0 * kPi * k / M;
        acc += phi(FlatGeodesic{alpha, beta, ang, p});
      }
    }
  }
  return acc / (static_cast<double>(M) * M * M);
}

KAverageTable::KAverageTable(const ProductField& f, double extent, double step, int M_angle)
    : U_(extent), h_(step) {
  n_ = static_cast<int>(std::ceil(U_ / h_)) + 4;
  grid_.assign(static_cast<size_t>(n_) * n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    const double u = i * h_;
    const double r1 = std::tanh(0.5 * u);
    for (int j = 0; j < n_; ++j) {
      const double v = j * h_;
      const double r2 = std::tanh(0.5 * v);
      double acc = 0.0;
      for (int a = 0; a < M_angle; ++a) {
        const double ca = std::cos(2.0 * kPi * a / M_angle), sa = std::sin(2.0 * kPi * a / M_angle);
        geo::ProductPoint pt;
        pt.z1 = geo::HypPoint(geo::cplx(r1 * ca, r1 * sa));
        for (int b = 0; b < M_angle; ++b) {
          const double cb = std::cos(2.0 * kPi * b / M_angle),
                       sb = std::sin(2.0 * kPi * b / M_angle);
          pt.z2 = geo::HypPoint(geo::cplx(r2 * cb, r2 * sb));
          acc += f(pt);
        }
      }
      grid_[static_cast<size_t>(i) * n_ + j] = acc / (static_cast<double>(M_angle) * M_angle);
    }
  }
}

double KAverageTable::operator()(double u, double v) const {
  const double au = std::abs(u) / h_, av = std::abs(v) / h_;
  if (au > n_ - 1 || av > n_ - 1) return 0.0;
  // separable 4-point Lagrange with even reflection across 0
  const int iu = std::clamp(static_cast<int>(std::floor(au)) - 1, -1, n_ - 4);
  const int iv = std::clamp(static_cast<int>(std::floor(av)) - 1, -1, n_ - 4);
  double wu[4], wv[4];
  for (int a = 0; a < 4; ++a) {
    wu[a] = 1.0;
    wv[a] = 1.0;
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      wu[a] *= (au - (iu + b)) / static_cast<double>(a - b);
      wv[a] *= (av - (iv + b)) / static_cast<double>(a - b);
    }
  }
  double out = 0.0;
  for (int a = 0; a < 4; ++a) {
    const int ia = std::abs(iu + a);  // even reflection
    for (int b = 0; b < 4; ++b) {
      const int ib = std::abs(iv + b);
      out += wu[a] * wv[b] * grid_[static_cast<size_t>(ia) * n_ + ib];
    }
  }
  return out;
}

InversionResult invert_product_xray(const ProductField& f, const QuadratureSpec& spec,
                                    int M_angle) {
  if (!f.decay.present())
    throw std::invalid_argument("invert_product_xray: decay metadata missing");
  const double cutoff = std::min(f.decay.cutoff_radius(1e-15) + 0.5, spec.line_cutoff);
  // step chosen so the interpolation wiggles stay invisible to d/dp below
  const KAverageTable F(f, cutoff + 0.2, 0.025, M_angle);

  // Omega(p) = (1/2pi) Int d phi Int ds F(p cos phi - s sin phi, p sin phi + s cos phi):
  // the flat line at distance p rotated through all in-flat angles.
  auto Omega = [&](double p) {
    const double smax = std::sqrt(std::max(cutoff * cutoff - p * p, 0.0));
    if (smax == 0.0) return 0.0;
    auto per_angle = [&](double ang) {
      const double c = std::cos(ang), s = std::sin(ang);
      auto line = [&](double t) { return F(p * c - t * s, p * s + t * c); };
      return num::panel_gauss(line, -smax, smax, spec.gauss_order, spec.panel_count);
    };
    return num::integrate_circle(per_angle, M_angle);
  };

  const double P = cutoff;
  num::SampledFunction G(num::profile_nodes(P, 0.05), Omega);
  const double h = std::max(spec.fd_step, 0.02);
  auto dG = [&](double p) { return num::d_dp(G, p, h).value; };
  const num::TailResult tail = num::weighted_tail_integral(dG, num::TailWeight::OneOverP, spec, P);

  InversionResult out;
  out.value = -tail.value / kPi;
  out.eps_sensitivity = tail.eps_sensitivity / kPi;
  out.divergence_flag = tail.divergence_flag;
  out.p_truncation = P;
  return out;
}

}  // namespace igt::prod

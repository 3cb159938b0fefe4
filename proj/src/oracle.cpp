#include "lindosc/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lindosc {

void require_valid_grid(const GridSpec& g) {
  if (!std::isfinite(g.half_width) || g.half_width < 4.0)
    throw std::invalid_argument("grid: half_width must be finite and >= 4");
  if (g.points_per_axis < 128 || g.points_per_axis % 2 != 0)
    throw std::invalid_argument("grid: points_per_axis must be even and >= 128");
}

std::vector<CharacteristicPoint> characteristics_ambiguity(
    const LindbladParams& p, const InitialConditions& ic, double t,
    const std::vector<std::array<double, 2>>& points, double dt) {
  require_valid_params(p);
  GaussianMoments m0 = initial_state(ic);
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("characteristics_ambiguity: t must be finite and >= 0");
  if (!(dt > 0.0) || dt > 1e-3)
    throw std::invalid_argument("characteristics_ambiguity: dt must be in (0, 1e-3]");

  double g = p.gamma;
  double w2 = p.omega * p.omega;

  // Backward characteristic flow: sigma runs from 0 to t, (Q, r) traces the
  // curve arriving at the requested point, L accumulates the damping of the
  // characteristic function along it.
  auto deriv = [&](const std::array<double, 3>& z) {
    double q = z[0];
    double r = z[1];
    return std::array<double, 3>{
        -(g * q + w2 * r),
        -(g * r - q),
        -0.5 * p.h11 * r * r - 0.5 * p.h33 * q * q + p.h13r * q * r};
  };

  long steps = t > 0.0 ? static_cast<long>(std::ceil(t / dt - 1e-9)) : 0;
  double h = steps > 0 ? t / static_cast<double>(steps) : 0.0;

  std::vector<CharacteristicPoint> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    std::array<double, 3> z = {pt[0], pt[1], 0.0};
    for (long k = 0; k < steps; ++k) {
      std::array<double, 3> k1 = deriv(z);
      std::array<double, 3> tmp;
      for (int i = 0; i < 3; ++i) tmp[i] = z[i] + 0.5 * h * k1[i];
      std::array<double, 3> k2 = deriv(tmp);
      for (int i = 0; i < 3; ++i) tmp[i] = z[i] + 0.5 * h * k2[i];
      std::array<double, 3> k3 = deriv(tmp);
      for (int i = 0; i < 3; ++i) tmp[i] = z[i] + h * k3[i];
      std::array<double, 3> k4 = deriv(tmp);
      for (int i = 0; i < 3; ++i)
        z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (!std::isfinite(z[0]) || !std::isfinite(z[1]) || !std::isfinite(z[2]))
      throw std::runtime_error("characteristics_ambiguity: characteristic integration diverged");
    CharacteristicPoint cp;
    cp.big_q = pt[0];
    cp.r = pt[1];
    cp.value = detail::ambiguity_unchecked(m0, z[0], z[1]) * std::exp(z[2]);
    out.push_back(cp);
  }
  return out;
}

QuadratureMoments quadrature_moments(const GaussianMoments& m, const GridSpec& g) {
  require_valid_state(m);
  require_valid_grid(g);
  int n = g.points_per_axis;
  double sr = std::sqrt(m.var_r);
  double sp = std::sqrt(m.var_p);
  double r_lo = m.mean_r - g.half_width * sr;
  double p_lo = m.mean_p - g.half_width * sp;
  double dr = 2.0 * g.half_width * sr / static_cast<double>(n - 1);
  double dp = 2.0 * g.half_width * sp / static_cast<double>(n - 1);

  double s0 = 0.0, s_r = 0.0, s_p = 0.0, s_rr = 0.0, s_pp = 0.0, s_rp = 0.0;
  for (int i = 0; i < n; ++i) {
    double big_r = r_lo + static_cast<double>(i) * dr;
    double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      double p = p_lo + static_cast<double>(j) * dp;
      double wj = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      double f = wi * wj * detail::wigner_unchecked(m, big_r, p);
      s0 += f;
      s_r += f * big_r;
      s_p += f * p;
      s_rr += f * big_r * big_r;
      s_pp += f * p * p;
      s_rp += f * big_r * p;
    }
  }
  double cell = dr * dp / (2.0 * std::numbers::pi);
  QuadratureMoments q;
  q.norm = s0 * cell;
  if (std::abs(q.norm - 1.0) > 1e-4)
    throw std::runtime_error("quadrature_moments: normalization off by more than 1e-4");
  q.recovered.mean_r = s_r * cell;
  q.recovered.mean_p = s_p * cell;
  q.recovered.var_r = s_rr * cell - q.recovered.mean_r * q.recovered.mean_r;
  q.recovered.var_p = s_pp * cell - q.recovered.mean_p * q.recovered.mean_p;
  q.recovered.cov_rp = s_rp * cell - q.recovered.mean_r * q.recovered.mean_p;
  q.max_residual = std::max({std::abs(q.recovered.mean_r - m.mean_r),
                             std::abs(q.recovered.mean_p - m.mean_p),
                             std::abs(q.recovered.var_r - m.var_r),
                             std::abs(q.recovered.var_p - m.var_p),
                             std::abs(q.recovered.cov_rp - m.cov_rp)});
  return q;
}

namespace {

PurityNorm purity_norm_once(const GaussianMoments& m, double half_width, int n) {
  double sr = std::sqrt(m.var_r);
  double lo = m.mean_r - half_width * sr;
  double d = 2.0 * half_width * sr / static_cast<double>(n - 1);

  PurityNorm out;
  double diag = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = lo + static_cast<double>(i) * d;
    double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    diag += wi * detail::density_unchecked(m, x, x).real();
  }
  out.norm = diag * d;

  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    double r1 = lo + static_cast<double>(i) * d;
    double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      double r2 = lo + static_cast<double>(j) * d;
      double wj = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      acc += wi * wj * std::norm(detail::density_unchecked(m, r1, r2));
    }
  }
  out.purity = acc * d * d;
  return out;
}

}  // namespace

PurityNorm quadrature_purity_norm(const GaussianMoments& m, const GridSpec& g) {
  require_valid_state(m);
  require_valid_grid(g);
  PurityNorm base = purity_norm_once(m, g.half_width, g.points_per_axis);
  PurityNorm wide = purity_norm_once(m, g.half_width + 2.0, g.points_per_axis);
  if (std::abs(wide.norm - base.norm) > 1e-6 || std::abs(wide.purity - base.purity) > 1e-6)
    throw std::runtime_error("quadrature_purity_norm: tail truncation not converged");
  return base;
}

}  // namespace lindosc

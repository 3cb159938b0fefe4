#include "lindosc/gaussian_state.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lindosc {

namespace {

bool all_finite(const GaussianMoments& m) {
  return std::isfinite(m.var_p) && std::isfinite(m.cov_rp) && std::isfinite(m.var_r) &&
         std::isfinite(m.mean_r) && std::isfinite(m.mean_p);
}

}  // namespace

ValidityReport validate_state(const GaussianMoments& m) {
  ValidityReport rep;
  if (!all_finite(m)) {
    rep.is_valid = false;
    rep.omega_sq = std::numeric_limits<double>::quiet_NaN();
    rep.violations.push_back({"finite_moments", std::numeric_limits<double>::quiet_NaN(), 0.0});
    return rep;
  }
  rep.omega_sq = uncertainty_product(m);
  if (!(m.var_p > 0.0)) {
    rep.is_valid = false;
    rep.violations.push_back({"momentum_dispersion_positive", m.var_p, 0.0});
  }
  if (!(m.var_r > 0.0)) {
    rep.is_valid = false;
    rep.violations.push_back({"position_dispersion_positive", m.var_r, 0.0});
  }
  if (rep.omega_sq < kUncertaintyBound - kUncertaintyTol) {
    rep.is_valid = false;
    rep.violations.push_back({"uncertainty_product_bound", rep.omega_sq, kUncertaintyBound});
  }
  return rep;
}

void require_valid_state(const GaussianMoments& m) {
  // Fast path: no report construction when the state is fine.
  if (all_finite(m) && m.var_p > 0.0 && m.var_r > 0.0 &&
      uncertainty_product(m) >= kUncertaintyBound - kUncertaintyTol)
    return;
  ValidityReport rep = validate_state(m);
  std::ostringstream msg;
  msg << "invalid Gaussian state:";
  for (const auto& v : rep.violations)
    msg << " [" << v.label << " measured=" << v.measured << " bound=" << v.bound << "]";
  throw std::invalid_argument(msg.str());
}

double effective_uncertainty(const GaussianMoments& m) {
  double w = uncertainty_product(m);
  if (w < kUncertaintyBound) {
    if (w < kUncertaintyBound - kUncertaintyTol)
      throw std::invalid_argument("effective_uncertainty: state below the uncertainty bound");
    return kUncertaintyBound;
  }
  return w;
}

namespace detail {

std::complex<double> ambiguity_unchecked(const GaussianMoments& m, double big_q, double r) {
  double re = -0.5 * (m.var_p * r * r + 2.0 * m.cov_rp * r * big_q + m.var_r * big_q * big_q);
  double im = big_q * m.mean_r - r * m.mean_p;
  return std::exp(std::complex<double>(re, im));
}

double wigner_unchecked(const GaussianMoments& m, double big_r, double p) {
  double w = uncertainty_product(m);
  double xr = big_r - m.mean_r;
  double xp = p - m.mean_p;
  double quad = m.var_p * xr * xr - 2.0 * m.cov_rp * xr * xp + m.var_r * xp * xp;
  return std::exp(-quad / (2.0 * w)) / std::sqrt(w);
}

std::complex<double> density_unchecked(const GaussianMoments& m, double r1, double r2) {
  double w = uncertainty_product(m);
  double c = m.var_r;
  double x1 = r1 - m.mean_r;
  double x2 = r2 - m.mean_r;
  // Quadratic form of the position representation. The coefficient of the
  // off-diagonal (r1 - r2)^2 direction carries 1/4 + w, the diagonal
  // direction 1/(4 var_r); the imaginary part is the cov_rp shear plus the
  // mean-momentum phase.
  double re = -((0.25 + w) * (x1 * x1 + x2 * x2) + (0.5 - 2.0 * w) * x1 * x2) / (2.0 * c);
  double im = m.cov_rp * (x1 * x1 - x2 * x2) / (2.0 * c) - m.mean_p * (r1 - r2);
  double pref = 1.0 / std::sqrt(2.0 * std::numbers::pi * c);
  return pref * std::exp(std::complex<double>(re, im));
}

}  // namespace detail

std::complex<double> ambiguity_at(const GaussianMoments& m, double big_q, double r) {
  require_valid_state(m);
  return detail::ambiguity_unchecked(m, big_q, r);
}

double wigner_at(const GaussianMoments& m, double big_r, double p) {
  require_valid_state(m);
  return detail::wigner_unchecked(m, big_r, p);
}

std::complex<double> density_at(const GaussianMoments& m, double r1, double r2) {
  require_valid_state(m);
  return detail::density_unchecked(m, r1, r2);
}

double purity(const GaussianMoments& m) {
  require_valid_state(m);
  return 1.0 / (2.0 * std::sqrt(effective_uncertainty(m)));
}

GaussianMoments thermal_state(double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0)
    throw std::invalid_argument("thermal_state: temperature must be positive and finite");
  double u = 1.0 / (2.0 * temperature);
  double half_coth = 0.5 / std::tanh(u);
  GaussianMoments m;
  m.var_p = half_coth;
  m.var_r = half_coth;
  m.cov_rp = 0.0;
  return m;
}

std::complex<double> thermal_density_at(double temperature, double r1, double r2) {
  if (!std::isfinite(temperature) || temperature <= 0.0)
    throw std::invalid_argument("thermal_density_at: temperature must be positive and finite");
  double u = 1.0 / (2.0 * temperature);
  double beta = 1.0 / temperature;
  // coth(beta) -> 1 and cosech(beta) -> 0 as T -> 0; 1/sinh overflows to 0
  // gracefully through the inf, so low temperatures stay well defined.
  double coth_beta = 1.0 / std::tanh(beta);
  double cosech_beta = 1.0 / std::sinh(beta);
  double pref = std::sqrt(std::tanh(u) / std::numbers::pi);
  double expo = -0.5 * coth_beta * (r1 * r1 + r2 * r2) + cosech_beta * r1 * r2;
  return std::complex<double>(pref * std::exp(expo), 0.0);
}

}  // namespace lindosc

#include "lindosc/length_scales.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lindosc {

namespace {

LengthScales lengths_from(double var_r, double w) {
  LengthScales ls;
  ls.omega_sq = w;
  ls.d_corr = std::sqrt(2.0 * var_r);
  ls.d_decoh = std::sqrt(var_r / (2.0 * w));
  double denom = 4.0 * w - 1.0;
  ls.d_mix = denom <= 0.0 ? std::numeric_limits<double>::infinity()
                          : std::sqrt(8.0 * var_r / denom);
  return ls;
}

}  // namespace

LengthScales length_scales(const GaussianMoments& m) {
  require_valid_state(m);
  return lengths_from(m.var_r, effective_uncertainty(m));
}

LengthScales length_scales_unchecked(const GaussianMoments& m) noexcept {
  return lengths_from(m.var_r, uncertainty_product(m));
}

double composition_residual(const GaussianMoments& m) {
  LengthScales ls = length_scales(m);
  double inv_mix = std::isinf(ls.d_mix) ? 0.0 : 1.0 / (ls.d_mix * ls.d_mix);
  return 1.0 / (ls.d_decoh * ls.d_decoh) - 1.0 / (ls.d_corr * ls.d_corr) - 4.0 * inv_mix;
}

LengthScales thermal_lengths(double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0)
    throw std::invalid_argument("thermal_lengths: temperature must be positive and finite");
  double u = 1.0 / (2.0 * temperature);
  double tanh_u = std::tanh(u);
  LengthScales ls;
  ls.d_corr = std::sqrt(1.0 / tanh_u);
  ls.d_decoh = std::sqrt(tanh_u);
  ls.d_mix = std::sqrt(2.0 * std::sinh(2.0 * u));  // overflows to inf as T -> 0
  double half_coth = 0.5 / tanh_u;
  ls.omega_sq = half_coth * half_coth;
  return ls;
}

}  // namespace lindosc

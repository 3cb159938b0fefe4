#pragma once

#include "lindosc/gaussian_state.hpp"

// Characteristic lengths of a Gaussian state, all in position units:
//
//   d_corr  = sqrt(2 var_r)                 width of the diagonal ridge of
//                                           |rho| (classical correlation);
//   d_decoh = sqrt(var_r / (2 w))           off-diagonal coherence width,
//                                           w the uncertainty product;
//   d_mix   = sqrt(8 var_r / (4 w - 1))     separation scale beyond which a
//                                           superposition is degraded by
//                                           mixedness; infinite for pure
//                                           states.
//
// They satisfy 1/d_decoh^2 = 1/d_corr^2 + 4/d_mix^2 identically.

namespace lindosc {

struct LengthScales {
  double d_corr = 0.0;
  double d_decoh = 0.0;
  double d_mix = 0.0;
  double omega_sq = 0.0;  // uncertainty product used (after the pure-state clamp)
};

// Throws std::invalid_argument on an unphysical state.
LengthScales length_scales(const GaussianMoments& m);

// Same formulas with no validity gate; NaN/inf propagate. Used for reporting
// along trajectories that leave the physical region.
LengthScales length_scales_unchecked(const GaussianMoments& m) noexcept;

// 1/d_decoh^2 - 1/d_corr^2 - 4/d_mix^2 recomputed from the emitted lengths
// (1/inf^2 contributes zero). Exercises the identity against rounding only.
double composition_residual(const GaussianMoments& m);

// Thermal closed forms: d_corr = sqrt(coth u), d_decoh = sqrt(tanh u),
// d_mix = sqrt(2 sinh 2u), with u = 1/(2T).
LengthScales thermal_lengths(double temperature);

}  // namespace lindosc
